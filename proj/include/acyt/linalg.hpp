#pragma once

#include <vector>

#include "acyt/errors.hpp"
#include "acyt/rational.hpp"

namespace acyt {

/// Incremental exact span of row vectors, kept in row-echelon form.
/// insert() reduces the candidate against the basis and reports whether it
/// enlarged the span.
class RowSpan {
 public:
  explicit RowSpan(std::size_t width) : width_(width) {}

  bool insert(std::vector<Rational> v) {
    if (v.size() != width_) throw Error("RowSpan: width mismatch");
    for (const auto& row : rows_) {
      std::size_t p = pivot_of(row);
      if (v[p] != 0) {
        Rational f = v[p] / row[p];
        for (std::size_t j = p; j < width_; ++j) v[j] -= f * row[j];
      }
    }
    std::size_t p = 0;
    while (p < width_ && v[p] == 0) ++p;
    if (p == width_) return false;
    rows_.push_back(std::move(v));
    // keep rows ordered by pivot so reduction stays one-pass
    for (std::size_t i = rows_.size(); i-- > 1;)
      if (pivot_of(rows_[i]) < pivot_of(rows_[i - 1])) std::swap(rows_[i], rows_[i - 1]);
    return true;
  }

  std::size_t dimension() const { return rows_.size(); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

 private:
  static std::size_t pivot_of(const std::vector<Rational>& row) {
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    return p;
  }
  std::size_t width_;
  std::vector<std::vector<Rational>> rows_;
};

inline std::size_t rank_of(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  RowSpan span(rows[0].size());
  for (const auto& r : rows) span.insert(r);
  return span.dimension();
}

/// Solves M x = b for square M by Gaussian elimination with exact pivots.
/// Throws ConsistencyError when M is singular.
inline std::vector<Rational> solve_square(std::vector<std::vector<Rational>> m,
                                          std::vector<Rational> b) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw ConsistencyError("solve_square: singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
  return x;
}

}  // namespace acyt
