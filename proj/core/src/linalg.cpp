#include "nilext/linalg.hpp"

#include "nilext/errors.hpp"
#include "nilext/subspace.hpp"

namespace nilext {

RrefResult rref(Mat m) {
  RrefResult out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    std::size_t best_bits = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      std::size_t bits = bit_size(m(i, c));
      if (best == rows || bits < best_bits) {
        best = i;
        best_bits = bits;
      }
    }
    if (best == rows) continue;
    m.swap_rows(r, best);
    const Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(m(r, j)) != 0) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rat f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  Mat reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = m(i, j);
  out.reduced = std::move(reduced);
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Subspace kernel(const Mat& m) {
  const std::size_t cols = m.cols();
  auto [red, piv] = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -red(i, f);
    basis.push_back(std::move(v));
  }
  return Subspace(cols, basis);
}

bool solve(const Mat& a, const Vec& b, Vec& x) {
  if (b.size() != a.rows()) throw DimensionError("solve: right-hand side length mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto [red, piv] = rref(std::move(aug));
  if (!piv.empty() && piv.back() == a.cols()) return false;
  x = zero_vec(a.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = red(i, a.cols());
  return true;
}

std::optional<Mat> inverse(const Mat& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto [red, piv] = rref(std::move(aug));
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
  return inv;
}

}  // namespace nilext
