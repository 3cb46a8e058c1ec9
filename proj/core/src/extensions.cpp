#include "nilext/extensions.hpp"

#include "nilext/linalg.hpp"
#include "nilext/operators.hpp"

#include <stdexcept>

namespace nilext {

NilradicalMismatchError::NilradicalMismatchError(Subspace computed)
    : PreconditionError("nilradical mismatch: computed nilradical has dimension " +
                        std::to_string(computed.dim())),
      computed(std::move(computed)) {}

void validate_extension(Extension& ext, Rng& rng) {
  Subspace nil = nilradical(ext.total, rng);
  if (nil != ext.nilideal) throw NilradicalMismatchError(std::move(nil));
  ext.validated = true;
}

Extension extend_by_derivations(const LieAlgebra& n, std::span<const Mat> gens, Rng& rng) {
  LinearLieAlgebra d = LinearLieAlgebra::derivations_from_spanning(n, gens);
  Extension ext = semidirect_sum(d, n);
  ext.provenance.method = "by-derivations";
  ext.provenance.generators.assign(gens.begin(), gens.end());
  validate_extension(ext, rng);
  return ext;
}

Extension extend_by_derivations(const LieAlgebra& n, std::span<const Mat> gens) {
  Rng rng(kDefaultSeed);
  return extend_by_derivations(n, gens, rng);
}

Extension standard_solvable_extension(const LieAlgebra& n, Rng& rng) {
  if (!is_nilpotent(n)) throw PreconditionError("standard extension needs a nilpotent algebra");
  LinearLieAlgebra torus = maximal_torus(derivations(n), rng);
  Extension ext = semidirect_sum(torus, n);
  ext.provenance.method = "standard-torus";
  ext.provenance.note = "torus dimension " + std::to_string(torus.dim());
  validate_extension(ext, rng);
  return ext;
}

Extension standard_solvable_extension(const LieAlgebra& n) {
  Rng rng(kDefaultSeed);
  return standard_solvable_extension(n, rng);
}

Extension extension_of_nilradical(const LieAlgebra& lie, Rng& rng) {
  Subspace nil = nilradical(lie, rng);
  Subspace comp = complement(nil);
  return Extension{lie, std::move(nil), std::move(comp), {"nilradical", {}, ""}, true};
}

Extension extension_of_nilradical(const LieAlgebra& lie) {
  Rng rng(kDefaultSeed);
  return extension_of_nilradical(lie, rng);
}

SplittingResult malcev_split_solvable(const LieAlgebra& lie, Rng& rng) {
  if (!is_solvable(lie)) throw PreconditionError("Malcev splitting is implemented for solvable algebras only");
  const std::size_t n = lie.dim();

  std::vector<Vec> sigma_span;
  if (!is_nilpotent(lie)) {
    const Subspace h = cartan_subalgebra(lie, rng);
    for (std::size_t i = 0; i < h.dim(); ++i)
      sigma_span.push_back(semisimple_part(ad(lie, h.basis_vector(i))).flatten());
  }
  const Subspace sigma(n * n, sigma_span);
  const Subspace inner = intersection(sigma, inner_derivations(lie));
  const Subspace t0 = complement_within(sigma, inner);

  std::vector<Mat> t0_mats;
  for (std::size_t i = 0; i < t0.dim(); ++i) t0_mats.push_back(Mat::unflatten(t0.basis_vector(i), n));
  const LinearLieAlgebra torus = LinearLieAlgebra::from_spanning(n, t0_mats);
  Extension ext = semidirect_sum(torus, lie, "s");

  SplittingResult out;
  out.algebra = std::move(ext.total);
  out.torus_part = std::move(ext.complement);
  out.added_dim = torus.dim();
  out.embedding = Mat(out.algebra.dim(), n);
  for (std::size_t j = 0; j < n; ++j) out.embedding(out.added_dim + j, j) = 1;

  // split contract: L an ideal, T0 complements nil(M), ad_M(T0) semisimple
  // and faithful
  const LieAlgebra& m = out.algebra;
  if (!is_ideal(m, ext.nilideal)) throw std::logic_error("malcev_split_solvable: L is not an ideal of M");
  if (out.added_dim > 0) {
    const Subspace nil_m = nilradical(m, rng);
    if (!intersection(nil_m, out.torus_part).is_zero() || nil_m.dim() + out.added_dim != m.dim())
      throw std::logic_error("malcev_split_solvable: T0 does not complement the nilradical of M");
    if (!intersection(center(m), out.torus_part).is_zero())
      throw std::logic_error("malcev_split_solvable: T0 acts trivially");
    for (std::size_t i = 0; i < out.torus_part.dim(); ++i)
      if (!is_semisimple(ad(m, out.torus_part.basis_vector(i))))
        throw std::logic_error("malcev_split_solvable: T0 element not ad-semisimple");
  }
  return out;
}

SplittingResult malcev_split_solvable(const LieAlgebra& lie) {
  Rng rng(kDefaultSeed);
  return malcev_split_solvable(lie, rng);
}

bool is_split_solvable(const LieAlgebra& lie, Rng& rng) {
  return malcev_split_solvable(lie, rng).added_dim == 0;
}

bool is_split_solvable(const LieAlgebra& lie) {
  Rng rng(kDefaultSeed);
  return is_split_solvable(lie, rng);
}

RankBoundReport verify_rank_bound(const Extension& ext, Rng& rng) {
  if (!ext.validated) throw PreconditionError("rank bound needs a validated extension");
  RankBoundReport rep;
  const LieAlgebra nil = subalgebra(ext.total, ext.nilideal);
  rep.generators = nil.dim() - derived_algebra(nil).dim();
  rep.toric_rank = toric_rank(ext.total, ext.nilideal, rng);
  rep.holds = rep.toric_rank <= rep.generators;
  rep.solvable = is_solvable(ext.total);
  rep.quotient_dim = ext.total.dim() - ext.nilideal.dim();
  rep.snobl_holds = rep.solvable && rep.quotient_dim <= rep.generators;
  return rep;
}

RankBoundReport verify_rank_bound(const Extension& ext) {
  Rng rng(kDefaultSeed);
  return verify_rank_bound(ext, rng);
}

TogoReport togo_dim_check(const LieAlgebra& a, const LieAlgebra& b) {
  TogoReport rep;
  rep.der_sum = derivations(direct_sum(a, b)).dim();
  rep.der_a = derivations(a).dim();
  rep.der_b = derivations(b).dim();
  const std::size_t ab_a = a.dim() - derived_algebra(a).dim();
  const std::size_t ab_b = b.dim() - derived_algebra(b).dim();
  rep.hom_a_to_center_b = ab_a * center(b).dim();
  rep.hom_b_to_center_a = ab_b * center(a).dim();
  return rep;
}

bool is_exact(const Extension& ext, const Subspace& semisimple_part) {
  // kernel of s -> ad(s)|_N, restricted to S
  const LieAlgebra& l = ext.total;
  const Subspace kills_n = centralizer(l, ext.nilideal);
  return intersection(kills_n, semisimple_part).is_zero();
}

Fingerprint fingerprint(const LieAlgebra& lie, Rng& rng) {
  Fingerprint fp;
  fp.dim = lie.dim();
  fp.lower_central = series_dims(lie, SeriesKind::LowerCentral);
  fp.derived = series_dims(lie, SeriesKind::Derived);
  fp.center = center(lie).dim();
  fp.derived_algebra = derived_algebra(lie).dim();
  fp.nilradical = nilradical(lie, rng).dim();
  fp.derivations = derivations(lie).dim();
  if (fp.derived.back() == 0) fp.malcev_splitting = malcev_split_solvable(lie, rng).algebra.dim();
  return fp;
}

Fingerprint fingerprint(const LieAlgebra& lie) {
  Rng rng(kDefaultSeed);
  return fingerprint(lie, rng);
}

}  // namespace nilext
