#pragma once

#include "nilext/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace nilext {

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

/// Reduced row-echelon form. In each column the pivot is the nonzero entry
/// of smallest bit size among the remaining rows (ties: lowest row), which
/// keeps coefficient growth down and the output deterministic.
RrefResult rref(Mat m);

std::size_t rank(const Mat& m);

class Subspace;

/// {v : m v = 0} as a subspace of Q^cols.
Subspace kernel(const Mat& m);

/// Solves a x = b; returns false when inconsistent. `x` receives one
/// particular solution (free variables set to zero).
bool solve(const Mat& a, const Vec& b, Vec& x);

/// Inverse of a square matrix; nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

}  // namespace nilext
