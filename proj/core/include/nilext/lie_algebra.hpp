#pragma once

#include "nilext/errors.hpp"
#include "nilext/matrix.hpp"
#include "nilext/subspace.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilext {

/// One nonzero coordinate of a basis bracket: coeff * e_index.
struct Term {
  std::size_t index;
  Rat coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Finite-dimensional Lie algebra over Q given by structure constants.
///
/// Only brackets [e_i, e_j] with i < j are stored, so antisymmetry holds by
/// construction. The Jacobi identity is not enforced on construction; call
/// verify_structure() (catalog loading and every constructor in this library
/// do).
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim, std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  /// Sets [e_i, e_j] (i != j); [e_j, e_i] follows by antisymmetry.
  /// Terms with zero coefficient are dropped; duplicate indices are summed.
  void set_bracket(std::size_t i, std::size_t j, std::vector<Term> terms);
  /// Sparse [e_i, e_j] for i < j.
  const std::vector<Term>& stored_bracket(std::size_t i, std::size_t j) const;

  /// Dense [e_i, e_j] for any i, j.
  Vec basis_bracket(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const;

  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<Term>> table_;  // upper triangle, row-major
};

struct JacobiViolation {
  std::size_t i, j, k;
};

struct StructureReport {
  std::vector<JacobiViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Lists every basis triple i < j < k whose Jacobi sum is nonzero.
StructureReport verify_structure(const LieAlgebra& lie);

/// Column j is [x, e_j].
Mat ad(const LieAlgebra& lie, const Vec& x);
Mat ad_basis(const LieAlgebra& lie, std::size_t i);

/// [A, B] as a subspace.
Subspace product_space(const LieAlgebra& lie, const Subspace& a, const Subspace& b);
Subspace derived_algebra(const LieAlgebra& lie);

enum class SeriesKind { LowerCentral, Derived };

/// Terms of the series, starting with L and ending at the first repetition
/// (at most dim + 1 terms).
std::vector<Subspace> series(const LieAlgebra& lie, SeriesKind kind);
std::vector<std::size_t> series_dims(const LieAlgebra& lie, SeriesKind kind);
bool is_nilpotent(const LieAlgebra& lie);
bool is_solvable(const LieAlgebra& lie);
bool is_abelian(const LieAlgebra& lie);

Subspace center(const LieAlgebra& lie);
Subspace centralizer(const LieAlgebra& lie, const Subspace& s);
/// {x : [x, S] ⊆ S}
Subspace normalizer(const LieAlgebra& lie, const Subspace& s);

bool is_subalgebra(const LieAlgebra& lie, const Subspace& s);

/// Basis indices (a, b) with [e_a, s_b] ∉ I, where s_b is the b-th basis
/// vector of I; nullopt when I is an ideal.
std::optional<std::pair<std::size_t, std::size_t>> ideal_witness(const LieAlgebra& lie,
                                                                 const Subspace& i);
bool is_ideal(const LieAlgebra& lie, const Subspace& i);

/// Smallest subalgebra containing V: fixed point of V <- V + [V, V].
Subspace generated_subalgebra(const LieAlgebra& lie, const Subspace& v);

/// Structure constants of a subalgebra in its RREF basis. Throws
/// PreconditionError if S is not bracket-closed.
LieAlgebra subalgebra(const LieAlgebra& lie, const Subspace& s);

class NotAnIdealError : public PreconditionError {
 public:
  NotAnIdealError(std::size_t basis_index, std::size_t ideal_index);
  std::size_t basis_index;   // e_a of L
  std::size_t ideal_index;   // b-th basis vector of the subspace
};

struct Quotient {
  LieAlgebra algebra;
  /// (dim L - dim I) x dim L, surjective with kernel I.
  Mat projection;
  /// Basis indices of L whose images form the quotient basis.
  std::vector<std::size_t> representatives;
};

/// L / I with basis the classes of e_j for the non-pivot columns j of I's
/// RREF basis. Throws NotAnIdealError with the first failing pair.
Quotient quotient(const LieAlgebra& lie, const Subspace& ideal);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// {x : κ(x, y) = 0 for all y in [L, L]} with κ the Killing form; the
/// solvable radical in characteristic 0.
Subspace killing_radical(const LieAlgebra& lie);
Mat killing_form(const LieAlgebra& lie);

/// Image of L under a change of basis: new e'_j = sum_i p(i, j) e_i.
/// Throws DimensionError if p is not invertible.
LieAlgebra change_basis(const LieAlgebra& lie, const Mat& p);

std::string describe(const LieAlgebra& lie);

}  // namespace nilext
