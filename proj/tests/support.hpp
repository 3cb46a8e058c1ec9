#pragma once

#include "nilext/matrix.hpp"
#include "oracles.hpp"

#include <random>

namespace testing {

inline nilext::Mat random_mat(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo = -3,
                              int hi = 3) {
  std::uniform_int_distribution<int> dist(lo, hi);
  nilext::Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

/// Entries p/q with |p| <= 4 and q in 1..3.
inline nilext::Mat random_rational_mat(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  nilext::Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      nilext::Rat r(num(rng), den(rng));
      r.canonicalize();
      m(i, j) = r;
    }
  return m;
}

/// Random matrix of rank at most r.
inline nilext::Mat random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                   std::size_t r) {
  return random_mat(rng, rows, r) * random_mat(rng, r, cols);
}

/// Unimodular-ish invertible matrix: unit upper times unit lower triangular.
inline nilext::Mat random_invertible(std::mt19937_64& rng, std::size_t n) {
  nilext::Mat u = random_mat(rng, n, n, -2, 2), l = random_mat(rng, n, n, -2, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i > j) u(i, j) = 0;
      if (i < j) l(i, j) = 0;
      if (i == j) u(i, j) = l(i, j) = 1;
    }
  return u * l;
}

/// P J P^-1 with J block diagonal: random eigenvalues with repeats and
/// Jordan blocks, so both Jordan parts are typically nonzero.
inline nilext::Mat random_jordan_conjugate(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> ev(-2, 2), coin(0, 1);
  nilext::Mat j(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, i) = (i > 0 && coin(rng)) ? j(i - 1, i - 1) : nilext::Rat(ev(rng));
    if (i > 0 && j(i, i) == j(i - 1, i - 1) && coin(rng)) j(i - 1, i) = 1;
  }
  nilext::Mat p = random_invertible(rng, n);
  nilext::Mat pinv = p;  // filled below via adjugate-free exact inverse
  // invert p by Gauss-Jordan on an augmented copy
  nilext::Mat aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      aug(r, c) = p(r, c);
      aug(r, n + c) = (r == c) ? 1 : 0;
    }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (aug(piv, c) == 0) ++piv;
    aug.swap_rows(piv, c);
    nilext::Rat f = aug(c, c);
    for (std::size_t k = 0; k < 2 * n; ++k) aug(c, k) /= f;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug(r, c) == 0) continue;
      nilext::Rat g = aug(r, c);
      for (std::size_t k = 0; k < 2 * n; ++k) aug(r, k) -= g * aug(c, k);
    }
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) pinv(r, c) = aug(r, n + c);
  return p * j * pinv;
}

inline oracle::Dense dense(const nilext::Mat& m) {
  oracle::Dense d(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
  return d;
}

}  // namespace testing
