#pragma once

#include <string>
#include <utility>
#include <vector>

#include "acyt/su3.hpp"

namespace acyt {

enum class ConnectionKind { levi_civita, torsion, hull, chern, custom };

inline const char* to_string(ConnectionKind k) {
  switch (k) {
    case ConnectionKind::levi_civita: return "levi_civita";
    case ConnectionKind::torsion: return "torsion";
    case ConnectionKind::hull: return "hull";
    case ConnectionKind::chern: return "chern";
    default: return "custom";
  }
}

/// Metric connection in the orthonormal frame, Γ_{ijk} = g(∇_{e_i} e_j, e_k),
/// together with the algebra it lives on.
struct Connection {
  ConnectionKind kind = ConnectionKind::custom;
  Tensor gamma = Tensor(3);
  LieAlgebra algebra = LieAlgebra::abelian();

  bool is_metric() const {
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j)
        for (int k = j; k <= kDim; ++k)
          if (gamma.at(i, j, k) != -gamma.at(i, k, j)) return false;
    return true;
  }

  /// T_{ijk} = Γ_{ijk} − Γ_{jik} − c_{ijk}.
  Tensor torsion_tensor() const {
    Tensor t(3);
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j)
        for (int k = 1; k <= kDim; ++k)
          t.at(i, j, k) = gamma.at(i, j, k) - gamma.at(j, i, k) - algebra.c(i, j, k);
    return t;
  }

  /// Torsion as a 3-form; requires the torsion tensor to be totally skew.
  Form torsion_form() const {
    Tensor t = torsion_tensor();
    if (!t.is_antisymmetric()) throw Error("connection torsion is not totally skew");
    return t.to_form();
  }
};

inline Connection levi_civita_connection(const LieAlgebra& g) {
  return {ConnectionKind::levi_civita, g.levi_civita(), g};
}

/// ∇ = ∇g + ½T for a totally skew torsion 3-form T.
inline Connection with_torsion(const LieAlgebra& g, const Form& T,
                               ConnectionKind kind = ConnectionKind::custom) {
  if (T.degree() != 3) throw DegreeError("with_torsion: torsion must be a 3-form");
  Tensor gamma = g.levi_civita();
  Tensor Tt = Tensor::from_form(T);
  Rational half = rat(1, 2);
  for (std::size_t f = 0; f < gamma.size(); ++f) gamma.flat_at(f) += half * Tt.flat_at(f);
  return {kind, std::move(gamma), g};
}

/// (∇_{e_i} A)_{j…} = −Σ over slots Γ_{i j_s m} A_{… m …} for constant
/// components; the sign makes ∇g = 0 hold for the flat metric tensor.
inline Tensor covariant_derivative(const Connection& cn, const Tensor& A) {
  const int k = A.rank();
  Tensor out(k + 1);
  if (k == 0) return out;
  std::vector<int> idx(k, 1);
  do {
    for (int i = 1; i <= kDim; ++i) {
      Rational v(0);
      std::vector<int> probe = idx;
      for (int slot = 0; slot < k; ++slot) {
        const int orig = idx[slot];
        for (int m = 1; m <= kDim; ++m) {
          const Rational& gim = cn.gamma.at(i, orig, m);
          if (gim == 0) continue;
          probe[slot] = m;
          const Rational& av = A.at(probe);
          if (av != 0) v -= gim * av;
        }
        probe[slot] = orig;
      }
      std::vector<int> oidx;
      oidx.reserve(k + 1);
      oidx.push_back(i);
      oidx.insert(oidx.end(), idx.begin(), idx.end());
      out.at(oidx) = v;
    }
  } while (Tensor::advance(idx));
  return out;
}

inline Tensor covariant_derivative(const Connection& cn, const Form& a) {
  return covariant_derivative(cn, Tensor::from_form(a));
}

/// σ^T, componentwise on sorted tuples:
///   σ_{xyzv} = Σ_s (T_{sxy}T_{szv} − T_{sxz}T_{syv} + T_{sxv}T_{syz}).
/// The wedge-sum definition is kept as a test oracle.
inline Form sigma_T(const Form& Tform) {
  if (Tform.degree() != 3) throw DegreeError("sigma_T: input must be a 3-form");
  Tensor T = Tensor::from_form(Tform);
  Form out(4);
  for (int x = 1; x <= kDim; ++x)
    for (int y = x + 1; y <= kDim; ++y)
      for (int z = y + 1; z <= kDim; ++z)
        for (int v = z + 1; v <= kDim; ++v) {
          Rational val(0);
          for (int ss = 1; ss <= kDim; ++ss)
            val += T.at(ss, x, y) * T.at(ss, z, v) - T.at(ss, x, z) * T.at(ss, y, v) +
                   T.at(ss, x, v) * T.at(ss, y, z);
          out.add_term(mask_of({x, y, z, v}), val);
        }
  return out;
}

/// Alternating sum of ∇T with the displayed sign pattern (three plus, one minus).
inline Form d_nabla_T(const Connection& cn, const Form& Tform) {
  Tensor nt = covariant_derivative(cn, Tform);
  Form out(4);
  for (int x = 1; x <= kDim; ++x)
    for (int y = x + 1; y <= kDim; ++y)
      for (int z = y + 1; z <= kDim; ++z)
        for (int v = z + 1; v <= kDim; ++v)
          out.add_term(mask_of({x, y, z, v}),
                       nt.at(x, y, z, v) + nt.at(y, z, x, v) + nt.at(z, x, y, v) -
                           nt.at(v, x, y, z));
  return out;
}

/// R(X,Y)Z = [∇_X,∇_Y]Z − ∇_{[X,Y]}Z realized on constant coefficients:
/// R_{ijkl} = Γ_{jks}Γ_{isl} − Γ_{iks}Γ_{jsl} − c_{ijs}Γ_{skl}.
inline Tensor curvature_tensor(const Connection& cn) {
  Tensor R(4);
  const Tensor& G = cn.gamma;
  const Tensor& c = cn.algebra.structure_constants();
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j) {
      if (i == j) continue;
      for (int k = 1; k <= kDim; ++k)
        for (int l = 1; l <= kDim; ++l) {
          Rational v(0);
          for (int ss = 1; ss <= kDim; ++ss) {
            if (G.at(j, k, ss) != 0 && G.at(i, ss, l) != 0) v += G.at(j, k, ss) * G.at(i, ss, l);
            if (G.at(i, k, ss) != 0 && G.at(j, ss, l) != 0) v -= G.at(i, k, ss) * G.at(j, ss, l);
            if (c.at(i, j, ss) != 0 && G.at(ss, k, l) != 0) v -= c.at(i, j, ss) * G.at(ss, k, l);
          }
          R.at(i, j, k, l) = v;
        }
    }
  return R;
}

struct CurvatureData {
  Tensor R = Tensor(4);
  Tensor Ric = Tensor(2);  // Ric(X,Y) = Σ_k R(e_k, X, Y, e_k)
  Form rho = Form(2);      // ρ(X,Y) = ½ R(X,Y,e_i,Je_i)
  Rational scal = Rational(0);
  Rational scal_g = Rational(0);  // Riemannian scalar curvature of the same metric
};

inline Tensor ricci_from_curvature(const Tensor& R) {
  Tensor ric(2);
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j) {
      Rational v(0);
      for (int k = 1; k <= kDim; ++k) v += R.at(k, i, j, k);
      ric.at(i, j) = v;
    }
  return ric;
}

inline Form rho_form(const SU3Structure& s, const Tensor& R) {
  Form rho(2);
  Rational half = rat(1, 2);
  for (int x = 1; x <= kDim; ++x)
    for (int y = x + 1; y <= kDim; ++y) {
      Rational v(0);
      for (int i = 1; i <= kDim; ++i)
        for (int m = 1; m <= kDim; ++m)
          if (s.Ft.at(m, i) != 0 && R.at(x, y, i, m) != 0) v += R.at(x, y, i, m) * s.Ft.at(m, i);
      rho.add_term(mask_of({x, y}), half * v);
    }
  return rho;
}

inline CurvatureData curvature(const Connection& cn, const SU3Structure& s) {
  CurvatureData out;
  out.R = curvature_tensor(cn);
  out.Ric = ricci_from_curvature(out.R);
  for (int i = 1; i <= kDim; ++i) out.scal += out.Ric.at(i, i);
  out.rho = rho_form(s, out.R);
  if (cn.kind == ConnectionKind::levi_civita) {
    out.scal_g = out.scal;
  } else {
    Tensor Rg = curvature_tensor(levi_civita_connection(cn.algebra));
    Tensor ricg = ricci_from_curvature(Rg);
    for (int i = 1; i <= kDim; ++i) out.scal_g += ricg.at(i, i);
  }
  return out;
}

/// The unique metric connection with totally skew torsion preserving the
/// structure: T = JdF + N, ∇ = ∇g + ½T. Exists iff N is totally skew.
inline std::pair<Connection, Form> torsion_connection(const LieAlgebra& g, const SU3Structure& s) {
  auto [N, skew] = nijenhuis(g, s);
  if (!skew)
    throw NoCharacteristicConnection(
        "no metric connection with skew torsion preserves this structure "
        "(Nijenhuis tensor is not totally skew)");
  Form Nform = N.to_form();
  Form T = j_on_form(s, g.d(s.F)) + Nform;
  Connection cn = with_torsion(g, T, ConnectionKind::torsion);
  if (!covariant_derivative(cn, s.F).is_zero())
    throw ConsistencyError("torsion connection does not annihilate F");
  if (!covariant_derivative(cn, Tensor::identity2()).is_zero())
    throw ConsistencyError("torsion connection is not metric");
  return {std::move(cn), std::move(T)};
}

/// ∇h = ∇ − T = ∇g − ½T; its torsion is −T.
inline Connection hull_connection(const Connection& torsion_conn) {
  if (torsion_conn.kind != ConnectionKind::torsion)
    throw Error("hull_connection expects the torsion connection");
  Tensor T = torsion_conn.torsion_tensor();
  Connection h{ConnectionKind::hull, torsion_conn.gamma - T, torsion_conn.algebra};
  return h;
}

/// Hermitian Chern-type connection, g(∇^c_X Y, Z) = g(∇g_X Y, Z) + ½ dF(JX,Y,Z).
/// Only defined for integrable structures; preserves g and J, and its torsion
/// is the branch tensor C of the appendix checks.
inline Connection chern_connection(const LieAlgebra& g, const SU3Structure& s) {
  auto [N, skew] = nijenhuis(g, s);
  if (!N.is_zero())
    throw NotIntegrable("Chern connection requires an integrable structure (N = 0)");
  Tensor dF = Tensor::from_form(g.d(s.F));
  Tensor gamma = g.levi_civita();
  Rational half = rat(1, 2);
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j)
      for (int k = 1; k <= kDim; ++k) {
        Rational v(0);
        for (int a = 1; a <= kDim; ++a)
          if (s.Ft.at(a, i) != 0 && dF.at(a, j, k) != 0) v += s.Ft.at(a, i) * dF.at(a, j, k);
        gamma.at(i, j, k) += half * v;
      }
  Connection cn{ConnectionKind::chern, std::move(gamma), g};
  if (!covariant_derivative(cn, s.F).is_zero())
    throw ConsistencyError("Chern connection does not annihilate F");
  return cn;
}

struct IdentityReport {
  struct Item {
    std::string name;
    bool pass = true;
    std::string detail;  // first failing tuple when pass is false
  };
  std::vector<Item> items;
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
};

/// Evaluates the full battery of curvature identities of a metric connection
/// with totally skew torsion, exactly, on every frame index tuple.
inline IdentityReport verify_curvature_identities(const Connection& cn) {
  Tensor Tt = cn.torsion_tensor();
  if (!Tt.is_antisymmetric())
    throw Error("verify_curvature_identities: torsion is not totally skew");
  const LieAlgebra& g = cn.algebra;
  Form Tform = Tt.to_form();

  Tensor R = curvature_tensor(cn);
  Tensor nt = covariant_derivative(cn, Tform);
  Form dT_form = g.d(Tform);
  Tensor dT = Tensor::from_form(dT_form);
  Form sigma_form = sigma_T(Tform);
  Tensor sig = Tensor::from_form(sigma_form);
  Form dnT = d_nabla_T(cn, Tform);
  Form deltaT_form = g.codifferential(Tform);
  Tensor deltaT = Tensor::from_form(deltaT_form);
  Tensor Ric = ricci_from_curvature(R);

  Connection lc = levi_civita_connection(g);
  Tensor Rg = curvature_tensor(lc);
  Tensor Ricg = ricci_from_curvature(Rg);
  Tensor ntg = covariant_derivative(lc, Tform);

  IdentityReport rep;
  auto tuple_str = [](int i, int j, int k, int l) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," +
           std::to_string(l) + ")";
  };
  auto sweep = [&](const std::string& name, auto&& eq) {
    IdentityReport::Item item{name, true, ""};
    for (int i = 1; i <= kDim && item.pass; ++i)
      for (int j = 1; j <= kDim && item.pass; ++j)
        for (int k = 1; k <= kDim && item.pass; ++k)
          for (int l = 1; l <= kDim && item.pass; ++l)
            if (!eq(i, j, k, l)) {
              item.pass = false;
              item.detail = "first failure at " + tuple_str(i, j, k, l);
            }
    rep.items.push_back(std::move(item));
  };

  Rational half = rat(1, 2), three_half = rat(3, 2), quarter = rat(1, 4);

  sweep("first_bianchi", [&](int x, int y, int z, int v) {
    return R.at(x, y, z, v) + R.at(y, z, x, v) + R.at(z, x, y, v) ==
           dT.at(x, y, z, v) - sig.at(x, y, z, v) + nt.at(v, x, y, z);
  });
  sweep("six_term_difference", [&](int x, int y, int z, int v) {
    return R.at(x, y, z, v) + R.at(y, z, x, v) + R.at(z, x, y, v) - R.at(v, x, y, z) -
               R.at(v, y, z, x) - R.at(v, z, x, y) ==
           three_half * dT.at(x, y, z, v) - sig.at(x, y, z, v);
  });
  sweep("cyclic_first_slot", [&](int x, int y, int z, int v) {
    return R.at(v, x, y, z) + R.at(v, y, z, x) + R.at(v, z, x, y) ==
           -half * dT.at(x, y, z, v) + nt.at(v, x, y, z);
  });
  sweep("pair_exchange_difference", [&](int x, int y, int z, int v) {
    return rat(2) * (R.at(x, y, z, v) - R.at(z, v, x, y)) ==
           nt.at(x, y, z, v) - nt.at(y, x, z, v) - nt.at(z, x, y, v) + nt.at(v, x, y, z);
  });
  {
    IdentityReport::Item item{"torsion_differential_split", dT_form == dnT + rat(2) * sigma_form,
                              ""};
    if (!item.pass) item.detail = "dT != d_nabla_T + 2 sigma_T";
    rep.items.push_back(std::move(item));
  }
  sweep("levi_civita_derivative_split", [&](int x, int y, int z, int v) {
    return ntg.at(x, y, z, v) == nt.at(x, y, z, v) + half * sig.at(x, y, z, v);
  });
  {
    IdentityReport::Item item{"ricci_comparison", true, ""};
    for (int i = 1; i <= kDim && item.pass; ++i)
      for (int j = 1; j <= kDim && item.pass; ++j) {
        Rational tt(0);
        for (int a = 1; a <= kDim; ++a)
          for (int l = 1; l <= kDim; ++l)
            if (Tt.at(i, a, l) != 0 && Tt.at(j, a, l) != 0) tt += Tt.at(i, a, l) * Tt.at(j, a, l);
        if (Ricg.at(i, j) != Ric.at(i, j) + half * deltaT.at(i, j) + quarter * tt) {
          item.pass = false;
          item.detail = "first failure at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    rep.items.push_back(std::move(item));
  }
  {
    IdentityReport::Item item{"ricci_antisymmetry", true, ""};
    for (int i = 1; i <= kDim && item.pass; ++i)
      for (int j = 1; j <= kDim && item.pass; ++j)
        if (Ric.at(i, j) - Ric.at(j, i) != -deltaT.at(i, j)) {
          item.pass = false;
          item.detail = "first failure at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
    rep.items.push_back(std::move(item));
  }
  {
    Rational scal(0), scalg(0);
    for (int i = 1; i <= kDim; ++i) {
      scal += Ric.at(i, i);
      scalg += Ricg.at(i, i);
    }
    IdentityReport::Item item{"scalar_comparison",
                              scalg == scal + quarter * Tt.full_norm_squared(), ""};
    if (!item.pass) item.detail = "Scal^g != Scal + ||T||^2/4";
    rep.items.push_back(std::move(item));
  }
  {
    bool p1 = true, p2 = true, p3 = true;
    for (int x = 1; x <= kDim && (p1 || p2 || p3); ++x)
      for (int y = 1; y <= kDim; ++y)
        for (int z = 1; z <= kDim; ++z)
          for (int v = 1; v <= kDim; ++v) {
            if (p1 && nt.at(x, y, z, v) != -nt.at(y, x, z, v)) p1 = false;
            if (p2 && R.at(x, y, z, v) != R.at(z, v, x, y)) p2 = false;
            if (p3 && dT.at(x, y, z, v) != rat(4) * ntg.at(x, y, z, v)) p3 = false;
          }
    IdentityReport::Item item{"pair_symmetry_equivalence", p1 == p2 && p2 == p3, ""};
    if (!item.pass)
      item.detail = std::string("predicates disagree: nabla_T_is_4form=") + (p1 ? "1" : "0") +
                    " pair_symmetric=" + (p2 ? "1" : "0") + " dT_eq_4_nabla_g_T=" + (p3 ? "1" : "0");
    rep.items.push_back(std::move(item));
  }
  return rep;
}

}  // namespace acyt
