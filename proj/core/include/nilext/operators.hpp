#pragma once

#include "nilext/matrix.hpp"
#include "nilext/poly.hpp"

#include <cstddef>

namespace nilext {

/// det(xI - m), monic of degree n. Similarity-reduces m to upper Hessenberg
/// form and runs the Hessenberg recurrence, O(n^3) field operations.
Poly charpoly(const Mat& m);

/// Monic generator of {p : p(m) = 0}, found as the first linear dependency
/// among I, m, m^2, ...
Poly minpoly(const Mat& m);

struct JordanChevalley {
  Mat semisimple;
  Mat nilpotent;
  /// semisimple == witness(m); degree < n.
  Poly witness;
  /// Newton steps taken.
  std::size_t iterations = 0;
};

/// m = s + n with s semisimple, n nilpotent, sn = ns, both polynomials in m.
/// Newton iteration p <- p - g(p) h(p) mod charpoly, where g is the
/// squarefree part of the characteristic polynomial and h g' = 1 mod g.
JordanChevalley jordan_chevalley(const Mat& m);

Mat semisimple_part(const Mat& m);

bool is_nilpotent(const Mat& m);
/// Minimal polynomial squarefree (diagonalizable over the algebraic closure).
bool is_semisimple(const Mat& m);

/// ceil(log2 n) + 1, the Newton iteration cap for size-n matrices.
std::size_t jordan_chevalley_iteration_bound(std::size_t n);

}  // namespace nilext
