#ifndef KMSS_LINALG_HPP
#define KMSS_LINALG_HPP

#include <array>
#include <tuple>
#include <vector>

#include "scalars.hpp"

namespace kmss {

// Dense exact linear algebra over a field (Rational or GaussianRational).
// Sizes here are small (a few hundred at most), plain Gaussian elimination
// is plenty.

template <typename F>
using Vec = std::vector<F>;
template <typename F>
using Mat = std::vector<std::vector<F>>;

using QVec = Vec<Rational>;
using QMat = Mat<Rational>;

template <typename F>
bool fe_is_zero(const F& x) {
  if constexpr (std::is_same_v<F, Rational>)
    return x == 0;
  else
    return x.is_zero();
}

/// Row-reduce m in place; returns the pivot column of each nonzero row.
template <typename F>
std::vector<int> rref(Mat<F>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t sel = row;
    while (sel < m.size() && fe_is_zero(m[sel][col])) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    F inv = m[row][col];
    for (size_t j = col; j < cols; ++j) m[row][j] = m[row][j] / inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || fe_is_zero(m[i][col])) continue;
      F f = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[row][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  m.resize(row);
  return pivots;
}

template <typename F>
size_t rank(Mat<F> m) {
  return rref(m).size();
}

/// Basis of the right nullspace of m (rows are vectors of length cols).
template <typename F>
Mat<F> nullspace(Mat<F> m) {
  if (m.empty()) return {};
  const size_t cols = m[0].size();
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  Mat<F> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(cols, F(0));
    v[free] = F(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// True if v lies in the row span of basis.
template <typename F>
bool in_span(const Mat<F>& basis, const Vec<F>& v) {
  Mat<F> m = basis;
  size_t r0 = rank(m);
  m = basis;
  m.push_back(v);
  return rank(m) == r0;
}

/// Indices of a maximal linearly independent subset of rows, scanned in order.
template <typename F>
std::vector<size_t> independent_subset(const Mat<F>& rows) {
  std::vector<size_t> keep;
  Mat<F> acc;
  size_t r = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    acc.push_back(rows[i]);
    Mat<F> tmp = acc;
    size_t nr = rank(std::move(tmp));
    if (nr > r) {
      r = nr;
      keep.push_back(i);
    } else {
      acc.pop_back();
    }
  }
  return keep;
}

/// Solve x*A = b for a single row vector x (A given by rows); empty optional
/// encoded as a {found, coeffs} pair.
template <typename F>
std::pair<bool, Vec<F>> solve_combination(const Mat<F>& rows, const Vec<F>& target) {
  // Transpose into a standard Ax=b solve with unknowns = row coefficients.
  const size_t n = rows.size();
  if (n == 0) {
    for (const auto& x : target)
      if (!fe_is_zero(x)) return {false, {}};
    return {true, {}};
  }
  const size_t m = rows[0].size();
  Mat<F> aug(m, Vec<F>(n + 1, F(0)));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = rows[j][i];
    aug[i][n] = target[i];
  }
  std::vector<int> pivots = rref(aug);
  Vec<F> x(n, F(0));
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == static_cast<int>(n)) return {false, {}};  // inconsistent
    x[pivots[r]] = aug[r][n];
  }
  return {true, x};
}

/// Inertia (negatives, positives, nulls) of a symmetric rational matrix,
/// computed by exact congruence diagonalization.
std::array<int, 3> inertia(QMat g);

}  // namespace kmss

#endif  // KMSS_LINALG_HPP
