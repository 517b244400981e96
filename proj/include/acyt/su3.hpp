#pragma once

#include <optional>
#include <string>
#include <utility>

#include "acyt/lie_algebra.hpp"
#include "acyt/linalg.hpp"

namespace acyt {

/// SU(3)-structure data (F, Ψ⁺, Ψ⁻) on the oriented Euclidean R^6 together
/// with the derived almost complex structure J (Je_j = Σ_i F_{ij} e_i) and
/// the 4-form Φ = ½ F∧F. J is always derived from F, never supplied.
struct SU3Structure {
  Form F = Form(2);
  Form psi_plus = Form(3);
  Form psi_minus = Form(3);
  Orientation orientation;

  Tensor J = Tensor(2);
  Form Phi = Form(4);

  // dense caches used by the contraction-heavy checks
  Tensor Ft = Tensor(2);
  Tensor Pp = Tensor(3);
  Tensor Pm = Tensor(3);
  Tensor Phit = Tensor(4);

  static SU3Structure make(Form F, Form psi_plus, Form psi_minus, Orientation o = {}) {
    if (F.degree() != 2 || psi_plus.degree() != 3 || psi_minus.degree() != 3)
      throw InputError("SU3Structure: F must be a 2-form, psi a pair of 3-forms");
    SU3Structure s;
    s.F = std::move(F);
    s.psi_plus = std::move(psi_plus);
    s.psi_minus = std::move(psi_minus);
    s.orientation = o;
    s.Phi = rat(1, 2) * wedge(s.F, s.F);
    s.Ft = Tensor::from_form(s.F);
    s.Pp = Tensor::from_form(s.psi_plus);
    s.Pm = Tensor::from_form(s.psi_minus);
    s.Phit = Tensor::from_form(s.Phi);
    s.J = s.Ft;  // J_{ij} = F_{ij} with the column convention Je_j = J_{ij} e_i
    return s;
  }

  /// The reference structure every built-in example uses.
  static SU3Structure standard(Orientation o = {}) {
    Form F(2);
    F.add_term(mask_of({1, 2}), rat(-1));
    F.add_term(mask_of({3, 4}), rat(-1));
    F.add_term(mask_of({5, 6}), rat(-1));
    Form pp(3);
    pp.add_term(mask_of({1, 3, 5}), rat(-1));
    pp.add_term(mask_of({2, 3, 6}), rat(1));
    pp.add_term(mask_of({1, 4, 6}), rat(1));
    pp.add_term(mask_of({2, 4, 5}), rat(1));
    Form pm(3);
    pm.add_term(mask_of({1, 3, 6}), rat(-1));
    pm.add_term(mask_of({1, 4, 5}), rat(-1));
    pm.add_term(mask_of({2, 3, 5}), rat(-1));
    pm.add_term(mask_of({2, 4, 6}), rat(1));
    return make(std::move(F), std::move(pp), std::move(pm), o);
  }

  friend bool operator==(const SU3Structure& a, const SU3Structure& b) {
    return a.F == b.F && a.psi_plus == b.psi_plus && a.psi_minus == b.psi_minus &&
           a.orientation.volume_tuple == b.orientation.volume_tuple;
  }
};

/// J acting on p-forms, (Jβ)(X,…) = (−1)^p β(JX,…).
inline Form j_on_form(const SU3Structure& s, const Form& a) {
  Form p = pullback(a, s.J);
  return (a.degree() & 1) ? -p : p;
}

struct SU3ValidationReport {
  bool ok = true;
  std::string first_violated;  // name of the first failed identity
};

/// Checks every compatibility identity the structure must satisfy; reports the
/// first failure by name instead of throwing.
inline SU3ValidationReport validate_su3(const SU3Structure& s) {
  auto fail = [](std::string what) { return SU3ValidationReport{false, std::move(what)}; };

  const Tensor& F = s.Ft;
  const Tensor& Pp = s.Pp;
  const Tensor& Pm = s.Pm;
  const Tensor& Phi = s.Phit;

  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j) {
      Rational acc(0);
      for (int p = 1; p <= kDim; ++p) acc += F.at(i, p) * F.at(p, j);
      if (acc != (i == j ? rat(-1) : Rational(0))) return fail("J^2 = -identity");
    }

  const Orientation& o = s.orientation;
  if (hodge_star(s.F, o) != -s.Phi) return fail("*F = -Phi");
  if (hodge_star(s.Phi, o) != -s.F) return fail("*Phi = -F");
  if (hodge_star(s.psi_plus, o) != s.psi_minus) return fail("*psi_plus = psi_minus");
  if (hodge_star(s.psi_minus, o) != -s.psi_plus) return fail("*psi_minus = -psi_plus");

  if (!wedge(s.F, s.psi_plus).is_zero()) return fail("F wedge psi_plus = 0");
  if (!wedge(s.F, s.psi_minus).is_zero()) return fail("F wedge psi_minus = 0");
  {
    Form f3 = wedge(s.F, wedge(s.F, s.F));
    if (wedge(s.psi_plus, s.psi_minus) != rat(-2, 3) * f3)
      return fail("psi_plus wedge psi_minus = -(2/3) F^3");
  }

  // contraction identities, full index sums throughout
  for (int j = 1; j <= kDim; ++j)
    for (int ss = 1; ss <= kDim; ++ss)
      for (int l = 1; l <= kDim; ++l)
        for (int m = 1; m <= kDim; ++m) {
          Rational rhs = F.at(j, ss) * F.at(l, m) + F.at(ss, l) * F.at(j, m) +
                         F.at(l, j) * F.at(ss, m);
          if (Phi.at(j, ss, l, m) != rhs) return fail("Phi from F quadratic identity");
        }
  for (int i = 1; i <= kDim; ++i) {
    Rational ap(0), am(0);
    for (int p = 1; p <= kDim; ++p)
      for (int q = 1; q <= kDim; ++q) {
        ap += Pp.at(i, p, q) * F.at(p, q);
        am += Pm.at(i, p, q) * F.at(p, q);
      }
    if (ap != 0) return fail("psi_plus contracted with F vanishes");
    if (am != 0) return fail("psi_minus contracted with F vanishes");
  }
  for (int i = 1; i <= kDim; ++i) {
    Rational ap(0), am(0);
    for (int j = 1; j <= kDim; ++j)
      for (int k = 1; k <= kDim; ++k)
        for (int l = 1; l <= kDim; ++l) {
          ap += Phi.at(i, j, k, l) * Pp.at(j, k, l);
          am += Phi.at(i, j, k, l) * Pm.at(j, k, l);
        }
    if (ap != 0 || am != 0) return fail("Phi contracted with psi vanishes");
  }
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j)
      for (int ss = 1; ss <= kDim; ++ss) {
        Rational ap(0), am(0);
        for (int k = 1; k <= kDim; ++k) {
          ap += Pp.at(i, j, k) * F.at(k, ss);
          am += Pm.at(i, j, k) * F.at(k, ss);
        }
        if (ap != -Pm.at(i, j, ss)) return fail("psi_plus . F = -psi_minus");
        if (am != Pp.at(i, j, ss)) return fail("psi_minus . F = psi_plus");
      }
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j) {
      Rational app(0), apm(0), amm(0);
      for (int p = 1; p <= kDim; ++p)
        for (int q = 1; q <= kDim; ++q) {
          app += Pp.at(i, p, q) * Pp.at(j, p, q);
          apm += Pp.at(i, p, q) * Pm.at(j, p, q);
          amm += Pm.at(i, p, q) * Pm.at(j, p, q);
        }
      Rational four_delta = (i == j) ? rat(4) : Rational(0);
      if (app != four_delta) return fail("psi_plus psi_plus trace = 4 delta");
      if (amm != four_delta) return fail("psi_minus psi_minus trace = 4 delta");
      if (apm != rat(-4) * F.at(i, j)) return fail("psi_plus psi_minus trace = -4 F");
    }
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j) {
      Rational a(0);
      for (int k = 1; k <= kDim; ++k)
        for (int l = 1; l <= kDim; ++l) a += Phi.at(i, j, k, l) * F.at(k, l);
      if (a != rat(4) * F.at(i, j)) return fail("Phi contracted with F = 4F");
    }
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j)
      for (int p = 1; p <= kDim; ++p) {
        Rational ap(0), am(0);
        for (int k = 1; k <= kDim; ++k)
          for (int l = 1; l <= kDim; ++l) {
            ap += Phi.at(i, j, k, l) * Pp.at(k, l, p);
            am += Phi.at(i, j, k, l) * Pm.at(k, l, p);
          }
        if (ap != rat(2) * Pp.at(i, j, p)) return fail("Phi contracted with psi_plus = 2 psi_plus");
        if (am != rat(2) * Pm.at(i, j, p)) return fail("Phi contracted with psi_minus = 2 psi_minus");
      }
  return {};
}

/// Nijenhuis tensor of (J, brackets) as a (0,3) tensor, plus whether it is
/// totally skew (the G1 condition).
inline std::pair<Tensor, bool> nijenhuis(const LieAlgebra& g, const SU3Structure& s) {
  const Tensor& F = s.Ft;
  const Tensor& c = g.structure_constants();
  Tensor N(3);
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j)
      for (int k = 1; k <= kDim; ++k) {
        Rational v(0);
        for (int a = 1; a <= kDim; ++a) {
          if (F.at(a, i) != 0) {
            for (int b = 1; b <= kDim; ++b)
              if (F.at(b, j) != 0 && c.at(a, b, k) != 0) v += F.at(a, i) * F.at(b, j) * c.at(a, b, k);
            for (int m = 1; m <= kDim; ++m)
              if (c.at(a, j, m) != 0 && F.at(k, m) != 0) v -= F.at(a, i) * c.at(a, j, m) * F.at(k, m);
          }
          if (F.at(a, j) != 0)
            for (int m = 1; m <= kDim; ++m)
              if (c.at(i, a, m) != 0 && F.at(k, m) != 0) v -= F.at(a, j) * c.at(i, a, m) * F.at(k, m);
        }
        v -= c.at(i, j, k);
        N.at(i, j, k) = v;
      }
  return {N, N.is_antisymmetric()};
}

inline Form nijenhuis_form(const LieAlgebra& g, const SU3Structure& s) {
  auto [N, skew] = nijenhuis(g, s);
  if (!skew) throw NoCharacteristicConnection("Nijenhuis tensor is not totally skew-symmetric");
  return N.to_form();
}

/// Lee form through the definition δF∘J alone; valid on any almost Hermitian
/// input (used for classification before any torsion data exists).
inline Form lee_form_from_dF(const LieAlgebra& g, const SU3Structure& s) {
  Form deltaF = g.codifferential(s.F);
  Tensor df = Tensor::from_form(deltaF);
  Form theta(1);
  for (int m = 1; m <= kDim; ++m) {
    Rational v(0);
    for (int a = 1; a <= kDim; ++a) v += s.Ft.at(a, m) * df.at(a);
    if (v != 0) theta.add_term(1u << (m - 1), v);
  }
  return theta;
}

/// Lee form of a G1 structure with torsion 3-form T. Three independent routes
/// (torsion trace, F-double-trace, δF∘J) must agree exactly; disagreement is a
/// convention bug and raises ConsistencyError.
inline Form lee_form(const LieAlgebra& g, const SU3Structure& s, const Form& Tform) {
  const Tensor T = Tensor::from_form(Tform);
  const Tensor& F = s.Ft;

  Form theta1(1);
  for (int m = 1; m <= kDim; ++m) {
    Rational v(0);
    for (int a = 1; a <= kDim; ++a) {
      if (F.at(a, m) == 0) continue;
      for (int i = 1; i <= kDim; ++i)
        for (int ss = 1; ss <= kDim; ++ss)
          if (F.at(ss, i) != 0 && T.at(a, i, ss) != 0) v += F.at(a, m) * F.at(ss, i) * T.at(a, i, ss);
    }
    v *= rat(-1, 2);
    if (v != 0) theta1.add_term(1u << (m - 1), v);
  }

  Form theta2(1);
  for (int i = 1; i <= kDim; ++i) {
    Rational v(0);
    for (int ss = 1; ss <= kDim; ++ss) {
      if (F.at(ss, i) == 0) continue;
      for (int j = 1; j <= kDim; ++j)
        for (int k = 1; k <= kDim; ++k)
          if (T.at(ss, j, k) != 0 && F.at(j, k) != 0) v += T.at(ss, j, k) * F.at(j, k) * F.at(ss, i);
    }
    v *= rat(1, 2);
    if (v != 0) theta2.add_term(1u << (i - 1), v);
  }

  Form theta2b(1);
  for (int i = 1; i <= kDim; ++i) {
    Rational v(0);
    for (int j = 1; j <= kDim; ++j)
      for (int k = 1; k <= kDim; ++k)
        for (int l = 1; l <= kDim; ++l)
          if (T.at(j, k, l) != 0) v += T.at(j, k, l) * s.Phit.at(j, k, l, i);
    v *= rat(1, 6);
    if (v != 0) theta2b.add_term(1u << (i - 1), v);
  }

  Form theta3 = lee_form_from_dF(g, s);

  if (!(theta1 == theta2 && theta2 == theta2b && theta2b == theta3))
    throw ConsistencyError("lee form routes disagree: trace=" + theta1.str() +
                           " F-double-trace=" + theta2.str() + " Phi-trace=" + theta2b.str() +
                           " codifferential=" + theta3.str());
  return theta1;
}

/// λ, μ with N = λΨ⁺ + μΨ⁻. Both the Nijenhuis route and the torsion route
/// are computed and must agree; the decomposition itself is verified exactly.
inline std::pair<Rational, Rational> lambda_mu(const SU3Structure& s, const Form& Nform,
                                               const Form& Tform) {
  Rational lam = rat(1, 4) * inner(Nform, s.psi_plus);
  Rational mu = rat(1, 4) * inner(Nform, s.psi_minus);
  Rational lam_t = inner(Tform, s.psi_plus);
  Rational mu_t = inner(Tform, s.psi_minus);
  if (lam != lam_t || mu != mu_t)
    throw ConsistencyError("lambda/mu routes disagree: nijenhuis gives (" + to_string(lam) + "," +
                           to_string(mu) + "), torsion gives (" + to_string(lam_t) + "," +
                           to_string(mu_t) + ")");
  if (!(Nform == lam * s.psi_plus + mu * s.psi_minus))
    throw ConsistencyError("Nijenhuis form is not lambda psi_plus + mu psi_minus");
  return {lam, mu};
}

struct Lambda2Parts {
  Form part1 = Form(2);   // multiples of F
  Form part6 = Form(2);   // anti-invariant, Jβ = −β
  Form part8 = Form(2);   // invariant trace-free, β∧F² = 0
};

inline Lambda2Parts project_lambda2(const SU3Structure& s, const Form& beta) {
  if (beta.degree() != 2) throw DegreeError("project_lambda2: input must be a 2-form");
  Lambda2Parts out;
  out.part1 = (inner(beta, s.F) / inner(s.F, s.F)) * s.F;
  Form jb = j_on_form(s, beta);
  Rational half = rat(1, 2);
  out.part6 = half * (beta - jb);
  out.part8 = half * (beta + jb) - out.part1;
  return out;
}

struct Lambda3Parts {
  Form re = Form(3);      // multiples of Ψ⁺
  Form im = Form(3);      // multiples of Ψ⁻
  Form six = Form(3);     // α∧F
  Form twelve = Form(3);  // annihilates F, Ψ⁺, Ψ⁻ under wedge
};

/// Splits a 3-form along the SU(3)-invariant decomposition. The α of the
/// α∧F-part is found by an exact 6×6 Gram solve, and the remainder is verified
/// to satisfy its three wedge conditions.
inline Lambda3Parts project_lambda3(const SU3Structure& s, const Form& gamma) {
  if (gamma.degree() != 3) throw DegreeError("project_lambda3: input must be a 3-form");
  Lambda3Parts out;
  out.re = (inner(gamma, s.psi_plus) / inner(s.psi_plus, s.psi_plus)) * s.psi_plus;
  out.im = (inner(gamma, s.psi_minus) / inner(s.psi_minus, s.psi_minus)) * s.psi_minus;
  Form rest = gamma - out.re - out.im;

  std::vector<Form> basis_wedges;
  basis_wedges.reserve(kDim);
  for (int i = 1; i <= kDim; ++i) {
    Form ei(1);
    ei.add_term(1u << (i - 1), Rational(1));
    basis_wedges.push_back(wedge(ei, s.F));
  }
  std::vector<std::vector<Rational>> gram(kDim, std::vector<Rational>(kDim));
  std::vector<Rational> rhs(kDim);
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) gram[i][j] = inner(basis_wedges[i], basis_wedges[j]);
    rhs[i] = inner(rest, basis_wedges[i]);
  }
  std::vector<Rational> alpha = solve_square(gram, rhs);
  Form six(3);
  for (int i = 0; i < kDim; ++i) six += alpha[i] * basis_wedges[i];
  out.six = six;
  out.twelve = rest - six;

  if (!wedge(out.twelve, s.F).is_zero() || !wedge(out.twelve, s.psi_plus).is_zero() ||
      !wedge(out.twelve, s.psi_minus).is_zero())
    throw ConsistencyError("project_lambda3: remainder fails its wedge conditions");
  return out;
}

/// Rank of the map sending a 4-form A to the non-Λ³₁₂ parts of all frame
/// contractions e_i⌟A. Injectivity (rank 15) is exactly the statement that a
/// 4-form with every contraction in Λ³₁₂ vanishes.
inline int check_prop_4form(const SU3Structure& s) {
  std::vector<std::vector<Rational>> rows;
  for (int b1 = 1; b1 <= kDim; ++b1)
    for (int b2 = b1 + 1; b2 <= kDim; ++b2)
      for (int b3 = b2 + 1; b3 <= kDim; ++b3)
        for (int b4 = b3 + 1; b4 <= kDim; ++b4) {
          Form A(4);
          A.add_term(mask_of({b1, b2, b3, b4}), Rational(1));
          std::vector<Rational> row;
          row.reserve(kDim * 20);
          for (int i = 1; i <= kDim; ++i) {
            Form gi = interior(i, A);
            Lambda3Parts parts = project_lambda3(s, gi);
            Form complement = parts.re + parts.im + parts.six;
            for (int c1 = 1; c1 <= kDim; ++c1)
              for (int c2 = c1 + 1; c2 <= kDim; ++c2)
                for (int c3 = c2 + 1; c3 <= kDim; ++c3)
                  row.push_back(complement.coefficient(mask_of({c1, c2, c3})));
          }
          rows.push_back(std::move(row));
        }
  return static_cast<int>(rank_of(rows));
}

struct ClassFlags {
  bool is_g1 = false;
  bool is_hermitian = false;
  bool is_balanced = false;
  bool is_nearly_kahler = false;
  bool is_kahler = false;
  bool is_balanced_g1 = false;
};

inline ClassFlags classify(const LieAlgebra& g, const SU3Structure& s) {
  ClassFlags f;
  auto [N, skew] = nijenhuis(g, s);
  f.is_g1 = skew;
  f.is_hermitian = N.is_zero();
  Form theta = lee_form_from_dF(g, s);
  f.is_balanced = theta.is_zero();
  Form dF = g.d(s.F);
  f.is_kahler = dF.is_zero() && f.is_hermitian;
  Lambda3Parts parts = project_lambda3(s, dF);
  f.is_nearly_kahler = skew && !N.is_zero() && parts.six.is_zero() && parts.twelve.is_zero();
  f.is_balanced_g1 = skew && f.is_balanced;
  return f;
}

}  // namespace acyt
