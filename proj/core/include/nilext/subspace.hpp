#pragma once

#include "nilext/matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace nilext {

/// Subspace of Q^n stored as the reduced row-echelon basis of its span.
/// Because the representation is canonical, equality is structural and
/// the coordinates of a member are its entries at the pivot columns.
class Subspace {
 public:
  Subspace() = default;
  /// Span of the rows of `spanning`.
  explicit Subspace(const Mat& spanning);
  Subspace(std::size_t ambient_dim, std::span<const Vec> spanning);

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// RREF basis, one vector per row.
  const Mat& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vec> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of a member with respect to basis(); throws
  /// std::domain_error if v is not in the subspace.
  Vec coordinates(const Vec& v) const;
  /// Inverse of coordinates().
  Vec combine(const Vec& coords) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
/// The span of the standard unit vectors at the non-pivot columns of `a`;
/// a and the result form a direct sum equal to the ambient space.
Subspace complement(const Subspace& a);
/// A complement of `inner` inside `outer` (requires inner ⊆ outer), chosen
/// as the lexicographically first subset of outer's basis rows that is
/// independent modulo inner.
Subspace complement_within(const Subspace& outer, const Subspace& inner);
/// Image of a subspace under a linear map (columns = images of unit vectors).
Subspace image(const Mat& map, const Subspace& s);
Subspace column_space(const Mat& m);

}  // namespace nilext
