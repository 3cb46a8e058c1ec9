#pragma once

#include "nilext/extension.hpp"
#include "nilext/structure.hpp"

#include <cstddef>
#include <span>

namespace nilext {

/// The computed nilradical of a candidate extension differs from the
/// embedded ideal (for instance a nilpotent derivation was adjoined alone).
class NilradicalMismatchError : public PreconditionError {
 public:
  explicit NilradicalMismatchError(Subspace computed);
  Subspace computed;
};

/// Checks nilradical(total) == nilideal and marks the extension validated;
/// throws NilradicalMismatchError otherwise.
void validate_extension(Extension& ext, Rng& rng);

/// span(gens) ⋉ N, validated. Errors: LeibnizError, ClosureError,
/// NilradicalMismatchError.
Extension extend_by_derivations(const LieAlgebra& n, std::span<const Mat> gens, Rng& rng);
Extension extend_by_derivations(const LieAlgebra& n, std::span<const Mat> gens);

/// maximal_torus(Der N) ⋉ N, validated. Throws PreconditionError for
/// non-nilpotent N.
Extension standard_solvable_extension(const LieAlgebra& n, Rng& rng);
Extension standard_solvable_extension(const LieAlgebra& n);

/// L viewed as an extension of its own nilradical (complement chosen by
/// `complement`), validated by construction.
Extension extension_of_nilradical(const LieAlgebra& lie, Rng& rng);
Extension extension_of_nilradical(const LieAlgebra& lie);

struct SplittingResult {
  LieAlgebra algebra;         // M = T0 ⋉ L
  Mat embedding;              // dim M x dim L, injective homomorphism
  Subspace torus_part;        // T0 inside M
  std::size_t added_dim = 0;  // dim M - dim L
};

/// Malcev splitting of a solvable algebra: T0 complements Σ ∩ ad(L) in
/// Σ = span{semisimple part of ad h : h in a Cartan subalgebra}, and
/// M = T0 ⋉ L. The split-algebra contract on M is checked before returning.
/// Throws PreconditionError for non-solvable input.
SplittingResult malcev_split_solvable(const LieAlgebra& lie, Rng& rng);
SplittingResult malcev_split_solvable(const LieAlgebra& lie);

bool is_split_solvable(const LieAlgebra& lie, Rng& rng);
bool is_split_solvable(const LieAlgebra& lie);

struct RankBoundReport {
  std::size_t toric_rank = 0;   // r_t(L/N)
  std::size_t generators = 0;   // dim N/[N,N]
  bool holds = false;           // toric_rank <= generators
  bool solvable = false;
  std::size_t quotient_dim = 0; // dim L/N
  bool snobl_holds = false;     // quotient_dim <= generators (solvable only)
};

/// Throws PreconditionError for an unvalidated extension.
RankBoundReport verify_rank_bound(const Extension& ext, Rng& rng);
RankBoundReport verify_rank_bound(const Extension& ext);

/// Dimension split of Der(A ⊕ B) into Der A, Der B and the two central
/// Hom blocks Hom(A/[A,A], Z(B)) and Hom(B/[B,B], Z(A)).
struct TogoReport {
  std::size_t der_sum = 0;
  std::size_t der_a = 0;
  std::size_t der_b = 0;
  std::size_t hom_a_to_center_b = 0;
  std::size_t hom_b_to_center_a = 0;
  std::size_t predicted() const { return der_a + der_b + hom_a_to_center_b + hom_b_to_center_a; }
  bool holds() const { return predicted() == der_sum; }
};

TogoReport togo_dim_check(const LieAlgebra& a, const LieAlgebra& b);

/// For a user-built extension with an explicitly supplied semisimple part S
/// (a subalgebra of the complement): true when no nonzero s in S acts
/// trivially on the nilpotent ideal.
bool is_exact(const Extension& ext, const Subspace& semisimple_part);

}  // namespace nilext
