#pragma once

#include <utility>
#include <vector>

#include "acyt/form.hpp"

namespace acyt {

inline std::size_t pow6(int k) {
  std::size_t n = 1;
  for (int i = 0; i < k; ++i) n *= kDim;
  return n;
}

/// Dense tensor of rank k on R^6, entries indexed by (i1,…,ik) with each index
/// in 1..6. No symmetry is assumed; symmetry is a checkable property.
class Tensor {
 public:
  explicit Tensor(int rank) : rank_(rank), a_(pow6(rank), Rational(0)) {}

  int rank() const { return rank_; }
  std::size_t size() const { return a_.size(); }

  Rational& at(const std::vector<int>& idx) { return a_[flat(idx)]; }
  const Rational& at(const std::vector<int>& idx) const { return a_[flat(idx)]; }

  template <typename... I>
  Rational& at(I... idx) {
    return a_[flat_v(idx...)];
  }
  template <typename... I>
  const Rational& at(I... idx) const {
    return a_[flat_v(idx...)];
  }

  Rational& flat_at(std::size_t f) { return a_[f]; }
  const Rational& flat_at(std::size_t f) const { return a_[f]; }

  /// The rank-0 case is a plain scalar.
  const Rational& scalar() const {
    if (rank_ != 0) throw DegreeError("scalar(): tensor has positive rank");
    return a_[0];
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (v != 0) return false;
    return true;
  }

  Tensor operator-() const {
    Tensor r(rank_);
    for (std::size_t f = 0; f < a_.size(); ++f) r.a_[f] = -a_[f];
    return r;
  }
  Tensor& operator+=(const Tensor& o) {
    check_same_rank(o);
    for (std::size_t f = 0; f < a_.size(); ++f) a_[f] += o.a_[f];
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    check_same_rank(o);
    for (std::size_t f = 0; f < a_.size(); ++f) a_[f] -= o.a_[f];
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Rational& s, const Tensor& t) {
    Tensor r(t.rank_);
    for (std::size_t f = 0; f < t.a_.size(); ++f) r.a_[f] = s * t.a_[f];
    return r;
  }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.rank_ == b.rank_ && a.a_ == b.a_;
  }

  /// Full index sum of entrywise products (no 1/p! normalization).
  Rational full_inner(const Tensor& o) const {
    check_same_rank(o);
    Rational s(0);
    for (std::size_t f = 0; f < a_.size(); ++f)
      if (a_[f] != 0 && o.a_[f] != 0) s += a_[f] * o.a_[f];
    return s;
  }
  Rational full_norm_squared() const { return full_inner(*this); }

  /// Antisymmetry under every adjacent index transposition (hence total).
  bool is_antisymmetric() const {
    if (rank_ <= 1) return true;
    std::vector<int> idx(rank_, 1);
    do {
      for (int s = 0; s + 1 < rank_; ++s) {
        std::vector<int> j = idx;
        std::swap(j[s], j[s + 1]);
        if (at(idx) != -at(j)) return false;
      }
    } while (advance(idx));
    return true;
  }

  bool is_symmetric_rank2() const {
    if (rank_ != 2) throw DegreeError("is_symmetric_rank2: rank must be 2");
    for (int i = 1; i <= kDim; ++i)
      for (int j = i + 1; j <= kDim; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  /// Fills the dense tensor of full antisymmetric components of a form.
  static Tensor from_form(const Form& f) {
    Tensor t(f.degree());
    if (f.degree() == 0) {
      t.a_[0] = f.coefficient(Mask(0));
      return t;
    }
    std::vector<int> idx(f.degree(), 1);
    do {
      t.at(idx) = f.component(idx);
    } while (advance(idx));
    return t;
  }

  /// Inverse of from_form; requires total antisymmetry.
  Form to_form() const {
    if (!is_antisymmetric()) throw Error("to_form: tensor is not totally antisymmetric");
    Form f(rank_);
    if (rank_ == 0) {
      if (a_[0] != 0) f.add_term(0, a_[0]);
      return f;
    }
    std::vector<int> idx(rank_);
    // iterate strictly increasing tuples
    for (int i = 0; i < rank_; ++i) idx[i] = i + 1;
    while (true) {
      f.add_term([&] {
        Mask m = 0;
        for (int v : idx) m |= 1u << (v - 1);
        return m;
      }(), at(idx));
      int p = rank_ - 1;
      while (p >= 0 && idx[p] == kDim - (rank_ - 1 - p)) --p;
      if (p < 0) break;
      ++idx[p];
      for (int q = p + 1; q < rank_; ++q) idx[q] = idx[q - 1] + 1;
    }
    return f;
  }

  static Tensor identity2() {
    Tensor t(2);
    for (int i = 1; i <= kDim; ++i) t.at(i, i) = 1;
    return t;
  }

  /// Advances a 1-based multi-index odometer; false once it wraps.
  static bool advance(std::vector<int>& idx) {
    for (std::size_t p = idx.size(); p-- > 0;) {
      if (idx[p] < kDim) {
        ++idx[p];
        for (std::size_t q = p + 1; q < idx.size(); ++q) idx[q] = 1;
        return true;
      }
    }
    return false;
  }

 private:
  void check_same_rank(const Tensor& o) const {
    if (o.rank_ != rank_) throw DegreeError("tensor rank mismatch");
  }
  std::size_t flat(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != rank_) throw DegreeError("tensor index arity mismatch");
    std::size_t f = 0;
    for (int v : idx) {
      if (v < 1 || v > kDim) throw DegreeError("tensor index out of range 1..6");
      f = f * kDim + (v - 1);
    }
    return f;
  }
  template <typename... I>
  std::size_t flat_v(I... idx) const {
    if (sizeof...(idx) != static_cast<std::size_t>(rank_))
      throw DegreeError("tensor index arity mismatch");
    std::size_t f = 0;
    for (int v : {static_cast<int>(idx)...}) {
      if (v < 1 || v > kDim) throw DegreeError("tensor index out of range 1..6");
      f = f * kDim + (v - 1);
    }
    return f;
  }

  int rank_;
  std::vector<Rational> a_;
};

/// Einstein contraction of paired axes (0-based axis numbers, first tensor's
/// axes then second's). Result rank r_A + r_B − 2·pairs; rank 0 is a scalar.
inline Tensor contract(const Tensor& A, const Tensor& B,
                       const std::vector<std::pair<int, int>>& pairs) {
  std::vector<bool> usedA(A.rank(), false), usedB(B.rank(), false);
  for (auto& [pa, pb] : pairs) {
    if (pa < 0 || pa >= A.rank() || pb < 0 || pb >= B.rank())
      throw DegreeError("contract: axis out of range");
    if (usedA[pa] || usedB[pb]) throw DegreeError("contract: axis paired twice");
    usedA[pa] = usedB[pb] = true;
  }
  std::vector<int> freeA, freeB;
  for (int a = 0; a < A.rank(); ++a)
    if (!usedA[a]) freeA.push_back(a);
  for (int b = 0; b < B.rank(); ++b)
    if (!usedB[b]) freeB.push_back(b);

  const int out_rank = static_cast<int>(freeA.size() + freeB.size());
  Tensor out(out_rank);
  const int k = static_cast<int>(pairs.size());

  std::vector<int> oidx(out_rank, 1), sidx(k, 1), ia(A.rank(), 1), ib(B.rank(), 1);
  auto run = [&]() {
    Rational acc(0);
    std::fill(sidx.begin(), sidx.end(), 1);
    while (true) {
      for (int t = 0; t < static_cast<int>(freeA.size()); ++t) ia[freeA[t]] = oidx[t];
      for (int t = 0; t < static_cast<int>(freeB.size()); ++t)
        ib[freeB[t]] = oidx[freeA.size() + t];
      for (int t = 0; t < k; ++t) {
        ia[pairs[t].first] = sidx[t];
        ib[pairs[t].second] = sidx[t];
      }
      const Rational& va = A.at(ia);
      if (va != 0) {
        const Rational& vb = B.at(ib);
        if (vb != 0) acc += va * vb;
      }
      if (k == 0 || !Tensor::advance(sidx)) break;
    }
    return acc;
  };

  if (out_rank == 0) {
    out.flat_at(0) = run();
    return out;
  }
  do {
    out.at(oidx) = run();
  } while (Tensor::advance(oidx));
  return out;
}

/// Pullback of a form through the linear map sending e_j to the vector with
/// components M(i,j): (M*φ)(X,…) = φ(MX,…). Row i of M is the 1-form e^i∘M.
inline Form pullback(const Form& a, const Tensor& M) {
  if (M.rank() != 2) throw DegreeError("pullback: matrix must have rank 2");
  Form out(a.degree());
  for (auto& [m, c] : a.terms()) {
    Form prod = Form::constant(Rational(1));
    for (int i : mask_indices(m)) {
      Form row(1);
      for (int j = 1; j <= kDim; ++j) {
        const Rational& v = M.at(i, j);
        if (v != 0) row.add_term(1u << (j - 1), v);
      }
      prod = wedge(prod, row);
    }
    out += c * prod;
  }
  return out;
}

}  // namespace acyt
