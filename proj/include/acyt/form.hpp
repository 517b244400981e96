#pragma once

#include <array>
#include <bit>
#include <initializer_list>
#include <map>
#include <sstream>
#include <vector>

#include "acyt/errors.hpp"
#include "acyt/rational.hpp"

namespace acyt {

inline constexpr int kDim = 6;

/// A strictly increasing index tuple on {1..6}, encoded as a 6-bit subset.
/// Bit i-1 set means index i is present.
using Mask = unsigned;

inline constexpr Mask kFullMask = 0x3F;

inline int mask_degree(Mask m) { return std::popcount(m); }

inline Mask mask_of(std::initializer_list<int> idx) {
  Mask m = 0;
  for (int i : idx) {
    if (i < 1 || i > kDim) throw DegreeError("index out of range 1..6");
    Mask bit = 1u << (i - 1);
    if (m & bit) throw DegreeError("repeated index in tuple");
    m |= bit;
  }
  return m;
}

inline std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  for (int i = 1; i <= kDim; ++i)
    if (m >> (i - 1) & 1) out.push_back(i);
  return out;
}

/// Sign of merging two disjoint sorted tuples, e_a ∧ e_b = sign · e_{a∪b}.
/// Zero when the tuples overlap.
inline int merge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int swaps = 0;
  for (int i = 1; i < kDim; ++i)
    if (b >> (i - 1) & 1) swaps += std::popcount(a >> i);
  return (swaps & 1) ? -1 : 1;
}

/// Orientation of the frame: the 6-tuple whose wedge is declared the positive
/// unit volume. Default e1∧…∧e6.
struct Orientation {
  std::array<int, kDim> volume_tuple{1, 2, 3, 4, 5, 6};

  int sign() const {
    std::array<int, kDim> t = volume_tuple;
    unsigned seen = 0;
    for (int v : t) {
      if (v < 1 || v > kDim) throw InputError("orientation: index out of range 1..6");
      if (seen >> (v - 1) & 1) throw InputError("orientation: repeated index");
      seen |= 1u << (v - 1);
    }
    int swaps = 0;
    for (int i = 0; i < kDim; ++i)
      for (int j = i + 1; j < kDim; ++j)
        if (t[i] > t[j]) ++swaps;
    return (swaps & 1) ? -1 : 1;
  }
};

/// Exterior form of fixed degree on the oriented Euclidean R^6, stored as a
/// sparse map from sorted index tuples to exact rational coefficients. Only
/// nonzero coefficients are kept; values are immutable in spirit (all
/// operations return new forms).
class Form {
 public:
  explicit Form(int degree) : degree_(degree) {
    if (degree < 0 || degree > kDim) throw DegreeError("form degree out of range 0..6");
  }

  static Form zero(int degree) { return Form(degree); }

  static Form monomial(std::initializer_list<int> idx, const Rational& c = Rational(1)) {
    Form f(static_cast<int>(idx.size()));
    f.add_term(mask_of(idx), c);
    return f;
  }

  static Form constant(const Rational& c) {
    Form f(0);
    f.add_term(0, c);
    return f;
  }

  int degree() const { return degree_; }
  bool is_zero() const { return coef_.empty(); }
  const std::map<Mask, Rational>& terms() const { return coef_; }

  Rational coefficient(Mask m) const {
    auto it = coef_.find(m);
    return it == coef_.end() ? Rational(0) : it->second;
  }
  Rational coefficient(std::initializer_list<int> idx) const { return coefficient(mask_of(idx)); }

  void add_term(Mask m, const Rational& c) {
    if (mask_degree(m) != degree_) throw DegreeError("tuple length does not match form degree");
    if (c == 0) return;
    auto [it, inserted] = coef_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coef_.erase(it);
    }
  }

  /// Full antisymmetric component for an arbitrary (possibly unsorted) index
  /// sequence; zero on repeats.
  Rational component(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != degree_)
      throw DegreeError("component: wrong number of indices");
    std::vector<int> s = idx;
    int swaps = 0;
    for (std::size_t i = 1; i < s.size(); ++i)
      for (std::size_t j = i; j > 0 && s[j - 1] > s[j]; --j) {
        std::swap(s[j - 1], s[j]);
        ++swaps;
      }
    Mask m = 0;
    for (int v : s) {
      if (v < 1 || v > kDim) throw DegreeError("component: index out of range");
      Mask bit = 1u << (v - 1);
      if (m & bit) return Rational(0);
      m |= bit;
    }
    Rational c = coefficient(m);
    return (swaps & 1) ? Rational(-c) : c;
  }

  Rational component(std::initializer_list<int> idx) const {
    return component(std::vector<int>(idx));
  }

  Form operator-() const {
    Form r(degree_);
    for (auto& [m, c] : coef_) r.coef_.emplace(m, -c);
    return r;
  }
  Form& operator+=(const Form& o) {
    if (o.degree_ != degree_) throw DegreeError("form addition: degree mismatch");
    for (auto& [m, c] : o.coef_) add_term(m, c);
    return *this;
  }
  Form& operator-=(const Form& o) { return *this += -o; }
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Rational& s, const Form& f) {
    Form r(f.degree_);
    if (s == 0) return r;
    for (auto& [m, c] : f.coef_) r.coef_.emplace(m, s * c);
    return r;
  }
  friend Form operator*(const Form& f, const Rational& s) { return s * f; }
  friend bool operator==(const Form& a, const Form& b) {
    return a.degree_ == b.degree_ && a.coef_ == b.coef_;
  }

  std::string str() const {
    if (coef_.empty()) return "0";
    // canonical: terms ordered lexicographically by index tuple
    std::vector<std::pair<std::vector<int>, Rational>> ts;
    for (auto& [m, c] : coef_) ts.emplace_back(mask_indices(m), c);
    std::sort(ts.begin(), ts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::ostringstream os;
    bool first = true;
    for (auto& [idx, c] : ts) {
      Rational a = c < 0 ? Rational(-c) : c;
      os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      first = false;
      if (degree_ == 0) {
        os << to_string(a);
        continue;
      }
      if (a != 1) os << to_string(a) << "*";
      os << "e";
      for (int i : idx) os << i;
    }
    return os.str();
  }

 private:
  int degree_;
  std::map<Mask, Rational> coef_;
};

inline Form wedge(const Form& a, const Form& b) {
  if (a.degree() + b.degree() > kDim)
    throw DegreeError("wedge: resulting degree exceeds 6");
  Form r(a.degree() + b.degree());
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms()) {
      int s = merge_sign(ma, mb);
      if (s != 0) r.add_term(ma | mb, s > 0 ? ca * cb : Rational(-(ca * cb)));
    }
  return r;
}

/// Euclidean Hodge dual with respect to g = identity and the given orientation.
inline Form hodge_star(const Form& a, const Orientation& o = {}) {
  Form r(kDim - a.degree());
  const int os = o.sign();
  for (auto& [m, c] : a.terms()) {
    Mask comp = kFullMask & ~m;
    int s = os * merge_sign(m, comp);
    r.add_term(comp, s > 0 ? c : Rational(-c));
  }
  return r;
}

/// Interior product with the frame vector e_i.
inline Form interior(int i, const Form& a) {
  if (a.degree() < 1) throw DegreeError("interior: degree must be >= 1");
  if (i < 1 || i > kDim) throw DegreeError("interior: index out of range 1..6");
  Form r(a.degree() - 1);
  const Mask bit = 1u << (i - 1);
  for (auto& [m, c] : a.terms()) {
    if (!(m & bit)) continue;
    int pos = std::popcount(m & (bit - 1));  // 0-based slot of i in the sorted tuple
    r.add_term(m & ~bit, (pos & 1) ? Rational(-c) : c);
  }
  return r;
}

/// Interior product of a p-form into a q-form, (α⌟γ)(…) = (1/p!) α_I γ_{I…}.
/// On sorted tuples this is the nested frame contraction applied ascending.
inline Form interior_form(const Form& alpha, const Form& gamma) {
  if (alpha.degree() > gamma.degree())
    throw DegreeError("interior_form: contracting form has larger degree");
  Form out(gamma.degree() - alpha.degree());
  for (auto& [m, c] : alpha.terms()) {
    Form g = gamma;
    for (int i : mask_indices(m)) g = interior(i, g);
    out += c * g;
  }
  return out;
}

/// Inner product ⟨α,β⟩ = (1/p!)·(full index sum) = sum over sorted tuples.
inline Rational inner(const Form& a, const Form& b) {
  if (a.degree() != b.degree()) throw DegreeError("inner: degree mismatch");
  Rational s(0);
  for (auto& [m, c] : a.terms()) {
    Rational cb = b.coefficient(m);
    if (cb != 0) s += c * cb;
  }
  return s;
}

inline Rational norm_squared(const Form& a) { return inner(a, a); }

inline Form volume_form(const Orientation& o = {}) {
  Form v(kDim);
  v.add_term(kFullMask, Rational(o.sign()));
  return v;
}

}  // namespace acyt
