#pragma once

#include "nilext/lie_algebra.hpp"
#include "nilext/linear_lie_algebra.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace nilext {

/// Explicit generator state for the randomized searches. Same seed, same
/// results.
using Rng = std::mt19937_64;
inline constexpr std::uint64_t kDefaultSeed = 20240607;
/// Candidates sampled per regular-element search round.
inline constexpr std::size_t kRegularPoolSize = 64;

/// Random integer combination of the rows of `s`, coefficients in [-4, 4].
Vec random_element(const Subspace& s, Rng& rng);

/// Der(L): the null space of D[x,y] = [Dx,y] + [x,Dy] over all basis pairs.
LinearLieAlgebra derivations(const LieAlgebra& lie);

/// span{ad e_i} inside Q^(n*n) (flattened matrices).
Subspace inner_derivations(const LieAlgebra& lie);

/// Der(L) nilpotent. Throws PreconditionError for non-nilpotent L.
bool is_characteristically_nilpotent(const LieAlgebra& lie);

/// ker (ad x)^n
Subspace fitting_null_component(const LieAlgebra& lie, const Vec& x);

/// A nilpotent, self-normalizing subalgebra. A regular element is picked as
/// the pool member with the smallest Fitting null component; the search
/// descends inside that component until it is nilpotent. Throws
/// std::runtime_error if no certified Cartan subalgebra is found.
Subspace cartan_subalgebra(const LieAlgebra& lie, Rng& rng);
Subspace cartan_subalgebra(const LieAlgebra& lie);

struct FittingDecomposition {
  Subspace null_part;  // L0: common generalized null space of ad H
  Subspace one_part;   // L1: H-invariant complement
};

/// Throws PreconditionError if H is not a nilpotent subalgebra.
FittingDecomposition fitting_decomposition(const LieAlgebra& lie, const Subspace& h);

/// Largest nilpotent ideal. Solvable case: L1 plus the kernel of
/// h -> semisimple part of ad h on a Cartan subalgebra H. Otherwise the
/// nilradical of the solvable radical. The result is checked to be a
/// nilpotent ideal before returning.
Subspace nilradical(const LieAlgebra& lie, Rng& rng);
Subspace nilradical(const LieAlgebra& lie);

/// Semisimple parts of a Cartan subalgebra of D. Requires D flagged as a
/// derivation algebra. Maximality is not certified.
LinearLieAlgebra maximal_torus(const LinearLieAlgebra& der, Rng& rng);
LinearLieAlgebra maximal_torus(const LinearLieAlgebra& der);

/// Dimension of a Cartan subalgebra of L/N. Throws PreconditionError when N
/// is not the nilradical of L.
std::size_t toric_rank(const LieAlgebra& lie, const Subspace& nilrad, Rng& rng);
std::size_t toric_rank(const LieAlgebra& lie, const Subspace& nilrad);

/// Isomorphism invariants used to certify non-isomorphism.
struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> lower_central;
  std::vector<std::size_t> derived;
  std::size_t center = 0;
  std::size_t derived_algebra = 0;
  std::size_t nilradical = 0;
  std::size_t derivations = 0;
  /// Present for solvable algebras only.
  std::optional<std::size_t> malcev_splitting;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const LieAlgebra& lie, Rng& rng);
Fingerprint fingerprint(const LieAlgebra& lie);

}  // namespace nilext
