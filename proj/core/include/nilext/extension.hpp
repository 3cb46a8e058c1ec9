#pragma once

#include "nilext/lie_algebra.hpp"
#include "nilext/linear_lie_algebra.hpp"

#include <string>
#include <vector>

namespace nilext {

/// How an extension was assembled.
struct Provenance {
  std::string method;              // "semidirect", "by-derivations", "standard-torus", ...
  std::vector<Mat> generators;     // acting matrices on the nilpotent ideal
  std::string note;
};

/// A Lie algebra with a distinguished nilpotent ideal N and a chosen
/// complement. `validated` is set once nilradical(total) == nilideal has been
/// checked.
struct Extension {
  LieAlgebra total;
  Subspace nilideal;
  Subspace complement;
  Provenance provenance;
  bool validated = false;
};

/// D ⋉ N with basis (d_1, ..., d_m, n_1, ..., n_k): [d_a, n_j] = d_a(n_j),
/// [d_a, d_b] from the matrix commutator. D must consist of derivations of N
/// (checked; LeibnizError with the failing pair otherwise). The returned
/// extension is not validated.
Extension semidirect_sum(const LinearLieAlgebra& d, const LieAlgebra& n,
                         const std::string& torus_label = "t");

}  // namespace nilext
