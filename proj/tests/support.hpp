#pragma once

#include <random>
#include <vector>

#include "acyt/instanton.hpp"

namespace test_support {

using namespace acyt;

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  int uniform(int lo, int hi) {  // inclusive
    std::uniform_int_distribution<int> d(lo, hi);
    return d(gen);
  }
  Rational rational(int max_num = 5, int max_den = 4) {
    int num = uniform(-max_num, max_num);
    int den = uniform(1, max_den);
    return rat(num, den);
  }
};

inline Form random_form(Rng& rng, int degree, int terms = 4) {
  Form f(degree);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> pool{1, 2, 3, 4, 5, 6};
    Mask m = 0;
    for (int k = 0; k < degree; ++k) {
      int pick = rng.uniform(0, static_cast<int>(pool.size()) - 1);
      m |= 1u << (pool[pick] - 1);
      pool.erase(pool.begin() + pick);
    }
    f.add_term(m, rng.rational());
  }
  return f;
}

/// Exterior derivative through the alternating bracket formula; independent of
/// the Leibniz-extension route used by the library.
inline Form d_bracket_formula(const LieAlgebra& g, const Form& a) {
  int p = a.degree();
  Form out(p + 1);
  std::vector<int> idx(p + 1);
  for (int i = 0; i <= p; ++i) idx[i] = i + 1;
  while (true) {
    Rational val(0);
    for (int r = 0; r <= p; ++r)
      for (int s = r + 1; s <= p; ++s) {
        std::vector<int> rest;
        for (int q = 0; q <= p; ++q)
          if (q != r && q != s) rest.push_back(idx[q]);
        for (int m = 1; m <= kDim; ++m) {
          const Rational& cm = g.c(idx[r], idx[s], m);
          if (cm == 0) continue;
          std::vector<int> args;
          args.push_back(m);
          args.insert(args.end(), rest.begin(), rest.end());
          Rational av = a.component(args);
          if (av == 0) continue;
          val += ((r + s) % 2 ? Rational(-1) : Rational(1)) * cm * av;
        }
      }
    Mask m = 0;
    for (int v : idx) m |= 1u << (v - 1);
    out.add_term(m, val);
    int q = p;
    while (q >= 0 && idx[q] == kDim - (p - q)) --q;
    if (q < 0) break;
    ++idx[q];
    for (int w = q + 1; w <= p; ++w) idx[w] = idx[w - 1] + 1;
  }
  return out;
}

/// σ^T through its defining wedge sum, ½ Σ_j (e_j⌟T)∧(e_j⌟T).
inline Form sigma_by_wedges(const Form& T) {
  Form out(4);
  for (int j = 1; j <= kDim; ++j) {
    Form hook = interior(j, T);
    out += wedge(hook, hook);
  }
  return rat(1, 2) * out;
}

// -- test corpus algebras -----------------------------------------------------

inline Form two_form(std::initializer_list<std::pair<std::initializer_list<int>, Rational>> ts) {
  Form f(2);
  for (auto& [idx, c] : ts) f.add_term(mask_of(idx), c);
  return f;
}

/// su(2) ⊕ R^3 with a totally skew bracket; the standard structure makes it a
/// flat-torsion-connection, non-balanced integrable example.
inline LieAlgebra su2xr3() {
  std::array<Form, kDim> d{Form(2), Form(2), Form(2), Form(2), Form(2), Form(2)};
  d[0] = two_form({{{2, 3}, rat(1)}});
  d[1] = two_form({{{1, 3}, rat(-1)}});
  d[2] = two_form({{{1, 2}, rat(1)}});
  return LieAlgebra(d);
}

/// Complex Heisenberg × R: integrable, non-balanced, and not ACYT.
inline LieAlgebra heisenberg_c() {
  std::array<Form, kDim> d{Form(2), Form(2), Form(2), Form(2), Form(2), Form(2)};
  d[5] = two_form({{{1, 2}, rat(1)}});
  return LieAlgebra(d);
}

/// Single structure equation de5 = e23; its Nijenhuis tensor is not totally
/// skew, so no compatible skew-torsion connection exists.
inline LieAlgebra non_g1_algebra() {
  std::array<Form, kDim> d{Form(2), Form(2), Form(2), Form(2), Form(2), Form(2)};
  d[4] = two_form({{{2, 3}, rat(1)}});
  return LieAlgebra(d);
}

/// The non-complex nilpotent example rescaled by a ≠ 0; every member is G1.
inline LieAlgebra nilp_scaled(const Rational& a) {
  std::array<Form, kDim> d{Form(2), Form(2), Form(2), Form(2), Form(2), Form(2)};
  d[0] = two_form({{{3, 6}, a}});
  d[3] = two_form({{{2, 6}, a}});
  d[4] = two_form({{{2, 3}, a}});
  return LieAlgebra(d);
}

/// Rotates (Ψ⁺, Ψ⁻) by a rational point (c, s) on the unit circle; the result
/// is again a valid structure for the same (g, J).
inline SU3Structure rotate_psi(const SU3Structure& s, const Rational& c, const Rational& sn) {
  if (c * c + sn * sn != 1) throw Error("rotate_psi needs c^2 + s^2 = 1");
  return SU3Structure::make(s.F, c * s.psi_plus + sn * s.psi_minus,
                            rat(-1) * sn * s.psi_plus + c * s.psi_minus, s.orientation);
}

/// Special-orthogonal rational frame change built from Pythagorean plane
/// rotations. Conjugating an input by Q leaves every invariant verdict fixed.
inline Tensor random_rotation(Rng& rng, int factors = 3) {
  Tensor Q = Tensor::identity2();
  const std::pair<Rational, Rational> cs[] = {
      {rat(3, 5), rat(4, 5)}, {rat(5, 13), rat(12, 13)}, {rat(8, 17), rat(15, 17)}};
  for (int f = 0; f < factors; ++f) {
    int p = rng.uniform(1, 6), q = rng.uniform(1, 6);
    if (p == q) continue;
    auto [c, sn] = cs[rng.uniform(0, 2)];
    Tensor R = Tensor::identity2();
    R.at(p, p) = c;
    R.at(q, q) = c;
    R.at(p, q) = -sn;
    R.at(q, p) = sn;
    Tensor QR(2);
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j) {
        Rational v(0);
        for (int k = 1; k <= kDim; ++k) v += Q.at(i, k) * R.at(k, j);
        QR.at(i, j) = v;
      }
    Q = QR;
  }
  return Q;
}

/// Pulls back an algebra-plus-structure through an orthogonal frame change Q,
/// c'_{ijk} = Q_{ai}Q_{bj}Q_{ck} c_{abc} and forms by pullback.
inline std::pair<LieAlgebra, SU3Structure> conjugate(const LieAlgebra& g, const SU3Structure& s,
                                                     const Tensor& Q) {
  const Tensor& c = g.structure_constants();
  Tensor cp(3);
  for (int i = 1; i <= kDim; ++i)
    for (int j = 1; j <= kDim; ++j)
      for (int k = 1; k <= kDim; ++k) {
        Rational v(0);
        for (int a = 1; a <= kDim; ++a) {
          if (Q.at(a, i) == 0) continue;
          for (int b = 1; b <= kDim; ++b) {
            if (Q.at(b, j) == 0) continue;
            for (int e = 1; e <= kDim; ++e)
              if (c.at(a, b, e) != 0 && Q.at(e, k) != 0)
                v += Q.at(a, i) * Q.at(b, j) * c.at(a, b, e) * Q.at(e, k);
          }
        }
        cp.at(i, j, k) = v;
      }
  std::array<Form, kDim> d{Form(2), Form(2), Form(2), Form(2), Form(2), Form(2)};
  for (int k = 1; k <= kDim; ++k)
    for (int i = 1; i <= kDim; ++i)
      for (int j = i + 1; j <= kDim; ++j) {
        const Rational& v = cp.at(i, j, k);
        if (v != 0) d[k - 1].add_term(mask_of({i, j}), -v);
      }
  LieAlgebra gp(d);
  SU3Structure sp = SU3Structure::make(pullback(s.F, Q), pullback(s.psi_plus, Q),
                                       pullback(s.psi_minus, Q), s.orientation);
  return {std::move(gp), std::move(sp)};
}

}  // namespace test_support
