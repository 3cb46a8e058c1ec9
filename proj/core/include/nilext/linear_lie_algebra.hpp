#pragma once

#include "nilext/lie_algebra.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace nilext {

/// Commutator [a, b] of two spanning matrices that falls outside the span.
class ClosureError : public PreconditionError {
 public:
  ClosureError(std::size_t a, std::size_t b);
  std::size_t a, b;
};

/// Basis pair (i, j) of the acted-on algebra where D[e_i,e_j] != [De_i,e_j] + [e_i,De_j].
class LeibnizError : public PreconditionError {
 public:
  LeibnizError(std::size_t generator, std::size_t i, std::size_t j);
  std::size_t generator, i, j;
};

/// A bracket-closed space of n x n matrices with its induced structure
/// constants. The basis is the RREF basis of the flattened span, so the
/// coordinates of a member matrix are its entries at the pivot positions.
class LinearLieAlgebra {
 public:
  LinearLieAlgebra() = default;

  /// Span of `spanning`; throws ClosureError if not closed under commutators.
  static LinearLieAlgebra from_spanning(std::size_t n, std::span<const Mat> spanning);
  /// As above, additionally requiring every spanning matrix to be a
  /// derivation of `acted_on` (LeibnizError otherwise).
  static LinearLieAlgebra derivations_from_spanning(const LieAlgebra& acted_on,
                                                    std::span<const Mat> spanning);

  /// Subalgebra of `parent` spanned by `spanning` (each must lie in the
  /// parent); inherits the derivation flag.
  static LinearLieAlgebra within(const LinearLieAlgebra& parent, std::span<const Mat> spanning);

  std::size_t matrix_size() const { return n_; }
  std::size_t dim() const { return span_.dim(); }
  bool flagged_derivations() const { return derivations_; }

  const std::vector<Mat>& basis() const { return basis_; }
  /// Flattened span inside Q^(n*n).
  const Subspace& span() const { return span_; }
  /// Induced structure constants in the basis above.
  const LieAlgebra& abstract() const { return abstract_; }

  bool contains(const Mat& m) const { return span_.contains(m.flatten()); }
  Vec coordinates(const Mat& m) const { return span_.coordinates(m.flatten()); }
  Mat element(const Vec& coords) const { return Mat::unflatten(span_.combine(coords), n_); }

 private:
  std::size_t n_ = 0;
  bool derivations_ = false;
  Subspace span_;
  std::vector<Mat> basis_;
  LieAlgebra abstract_;
};

/// nullopt when d is a derivation of L, else the first failing basis pair.
std::optional<std::pair<std::size_t, std::size_t>> leibniz_witness(const LieAlgebra& lie,
                                                                   const Mat& d);
bool is_derivation(const LieAlgebra& lie, const Mat& d);

}  // namespace nilext
