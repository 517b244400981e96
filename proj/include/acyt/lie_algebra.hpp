#pragma once

#include <array>
#include <string>

#include "acyt/tensor.hpp"

namespace acyt {

/// A 6-dimensional real Lie algebra presented through the exterior derivative
/// of the dual basis: entry k holds d e_k as a 2-form. The structure constants
/// c_{ijk} = g([e_i,e_j], e_k) are derived from d e_k = −½ c_{ijk} e_i∧e_j.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::array<Form, kDim> d_basis) : d1_(std::move(d_basis)), c_(3) {
    for (const auto& f : d1_)
      if (f.degree() != 2) throw InputError("LieAlgebra: d e_k must be a 2-form");
    for (int k = 1; k <= kDim; ++k)
      for (int i = 1; i <= kDim; ++i)
        for (int j = 1; j <= kDim; ++j)
          c_.at(i, j, k) = -d1_[k - 1].component({i, j});
  }

  static LieAlgebra abelian() {
    return LieAlgebra({Form(2), Form(2), Form(2), Form(2), Form(2), Form(2)});
  }

  const Form& d_basis(int k) const { return d1_[k - 1]; }
  const Rational& c(int i, int j, int k) const { return c_.at(i, j, k); }
  const Tensor& structure_constants() const { return c_; }

  struct ValidationReport {
    bool ok = true;
    int failing_k = 0;  // first k with d(d e_k) != 0
    Form d2 = Form(3);
    std::string message() const {
      if (ok) return "ok";
      return "d^2 e_" + std::to_string(failing_k) + " = " + d2.str() + " != 0";
    }
  };

  /// Jacobi identity, phrased as d∘d = 0 on the dual basis.
  ValidationReport validate() const {
    for (int k = 1; k <= kDim; ++k) {
      Form dd = d(d1_[k - 1]);
      if (!dd.is_zero()) return {false, k, dd};
    }
    return {};
  }

  /// Invariant exterior derivative, extended from the basis 1-forms as an
  /// antiderivation. Agrees with the alternating bracket formula (tested).
  Form d(const Form& a) const {
    if (a.degree() == kDim) throw DegreeError("d: form already has top degree");
    Form out(a.degree() + 1);
    for (auto& [m, coef] : a.terms()) {
      auto idx = mask_indices(m);
      for (std::size_t p = 0; p < idx.size(); ++p) {
        Form rest(static_cast<int>(idx.size()) - 1);
        rest.add_term(m & ~(1u << (idx[p] - 1)), Rational(1));
        Form piece = wedge(d1_[idx[p] - 1], rest);
        out += ((p & 1) ? Rational(-coef) : coef) * piece;
      }
    }
    return out;
  }

  /// Co-differential δ = −*d* (dimension six is even, so the sign is uniform
  /// in the degree); independent of the orientation since * appears twice.
  Form codifferential(const Form& a) const {
    if (a.degree() < 1) throw DegreeError("codifferential: degree must be >= 1");
    return -hodge_star(d(hodge_star(a)));
  }

  /// Koszul formula in an orthonormal frame with constant coefficients.
  /// Metric and torsion-free by construction (checked in tests).
  Tensor levi_civita() const {
    Tensor g(3);
    Rational half = rat(1, 2);
    for (int i = 1; i <= kDim; ++i)
      for (int j = 1; j <= kDim; ++j)
        for (int k = 1; k <= kDim; ++k)
          g.at(i, j, k) = half * (c_.at(i, j, k) - c_.at(j, k, i) + c_.at(k, i, j));
    return g;
  }

  /// trace(ad_X) = 0 for every X; necessary for compact quotients.
  bool is_unimodular() const {
    for (int j = 1; j <= kDim; ++j) {
      Rational tr(0);
      for (int i = 1; i <= kDim; ++i) tr += c_.at(j, i, i);
      if (tr != 0) return false;
    }
    return true;
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.d1_ == b.d1_; }

 private:
  std::array<Form, kDim> d1_;
  Tensor c_;
};

}  // namespace acyt
