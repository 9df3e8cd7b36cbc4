#ifndef QDEFORM_LINALG_HPP
#define QDEFORM_LINALG_HPP

// Exact Gaussian elimination over Scalar.

#include "qdeform/scalar.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qdeform {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major

inline Vec zero_vec(const ScalarField& F, std::size_t n) { return Vec(n, Scalar(F)); }

inline bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

struct RowEchelon {
  Mat rows;                   // reduced, nonzero rows only
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; cols is needed for an empty input.
inline RowEchelon rref(Mat m, std::size_t cols) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Scalar inv = m[r][c].inverse();
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Scalar f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

inline std::size_t rank(const Mat& m, std::size_t cols) { return rref(m, cols).pivots.size(); }

/// Basis of {x : m x = 0}.
inline Mat nullspace(const Mat& m, std::size_t cols, const ScalarField& F) {
  const RowEchelon e = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Mat out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(F, cols);
    v[free] = Scalar(F, 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

/// Some x with m x = b, or nothing.
inline std::optional<Vec> solve(const Mat& m, const Vec& b, std::size_t cols, const ScalarField& F) {
  Mat aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const RowEchelon e = rref(std::move(aug), cols + 1);
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  Vec x = zero_vec(F, cols);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.rows[r][cols];
  return x;
}

}  // namespace qdeform

#endif  // QDEFORM_LINALG_HPP
