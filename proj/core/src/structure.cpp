#include "nilext/structure.hpp"

#include "nilext/linalg.hpp"
#include "nilext/operators.hpp"

#include <stdexcept>

namespace nilext {

namespace {

// Subspace of L from coordinates relative to the basis of a subspace S.
Subspace lift(const Subspace& s, const Subspace& inner) {
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < inner.dim(); ++i) vecs.push_back(s.combine(inner.basis_vector(i)));
  return Subspace(s.ambient_dim(), vecs);
}

bool is_nilpotent_subalgebra(const LieAlgebra& lie, const Subspace& h) {
  return is_subalgebra(lie, h) && is_nilpotent(subalgebra(lie, h));
}

}  // namespace

Vec random_element(const Subspace& s, Rng& rng) {
  Vec coords(s.dim());
  for (auto& c : coords) c = static_cast<long>(rng() % 9) - 4;
  return s.combine(coords);
}

LinearLieAlgebra derivations(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  std::vector<std::vector<Vec>> c(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = lie.basis_bracket(i, j);
  // unknown D(a, b) sits at a*n + b
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec row = zero_vec(n * n);
        for (std::size_t m = 0; m < n; ++m)
          if (sgn(c[i][j][m]) != 0) row[k * n + m] += c[i][j][m];
        for (std::size_t a = 0; a < n; ++a) {
          if (sgn(c[a][j][k]) != 0) row[a * n + i] -= c[a][j][k];
          if (sgn(c[i][a][k]) != 0) row[a * n + j] -= c[i][a][k];
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  Subspace sol = rows.empty() ? Subspace::full(n * n) : kernel(Mat::from_rows(rows, n * n));
  std::vector<Mat> mats;
  for (std::size_t r = 0; r < sol.dim(); ++r) mats.push_back(Mat::unflatten(sol.basis_vector(r), n));
  return LinearLieAlgebra::derivations_from_spanning(lie, mats);
}

Subspace inner_derivations(const LieAlgebra& lie) {
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < lie.dim(); ++i) vecs.push_back(ad_basis(lie, i).flatten());
  return Subspace(lie.dim() * lie.dim(), vecs);
}

bool is_characteristically_nilpotent(const LieAlgebra& lie) {
  if (!is_nilpotent(lie)) throw PreconditionError("characteristic nilpotency needs a nilpotent algebra");
  return is_nilpotent(derivations(lie).abstract());
}

Subspace fitting_null_component(const LieAlgebra& lie, const Vec& x) {
  return kernel(power(ad(lie, x), lie.dim()));
}

Subspace cartan_subalgebra(const LieAlgebra& lie, Rng& rng) {
  const std::size_t n = lie.dim();
  const Subspace full = Subspace::full(n);
  if (is_nilpotent(lie)) return full;

  constexpr int kAttempts = 8;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Subspace h = full;
    // descend: replace H by the smallest Fitting null component of ad_H
    // over a sampled pool, until H is nilpotent
    for (;;) {
      const LieAlgebra hs = subalgebra(lie, h);
      if (is_nilpotent(hs)) break;
      const Subspace hfull = Subspace::full(hs.dim());
      Subspace best = hfull;
      for (std::size_t p = 0; p < kRegularPoolSize; ++p) {
        Subspace cand = fitting_null_component(hs, random_element(hfull, rng));
        if (cand.dim() < best.dim()) best = std::move(cand);
      }
      if (best.dim() == hs.dim()) break;  // unlucky pool; retry below
      h = lift(h, best);
    }
    if (is_nilpotent_subalgebra(lie, h) && normalizer(lie, h) == h) return h;
  }
  throw std::runtime_error("cartan_subalgebra: no certified Cartan subalgebra found");
}

Subspace cartan_subalgebra(const LieAlgebra& lie) {
  Rng rng(kDefaultSeed);
  return cartan_subalgebra(lie, rng);
}

FittingDecomposition fitting_decomposition(const LieAlgebra& lie, const Subspace& h) {
  const std::size_t n = lie.dim();
  if (!is_nilpotent_subalgebra(lie, h))
    throw PreconditionError("Fitting decomposition needs a nilpotent subalgebra");
  FittingDecomposition fd{Subspace::full(n), Subspace::zero(n)};
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Mat p = power(ad(lie, h.basis_vector(i)), n);
    fd.null_part = intersection(fd.null_part, kernel(p));
    fd.one_part = sum(fd.one_part, column_space(p));
  }
  return fd;
}

namespace {

Subspace nilradical_solvable(const LieAlgebra& lie, Rng& rng) {
  const std::size_t n = lie.dim();
  const Subspace h = cartan_subalgebra(lie, rng);
  const FittingDecomposition fd = fitting_decomposition(lie, h);
  // h -> S(ad h) is linear on H; its kernel is the ad-nilpotent part of H
  Mat sys(n * n, h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Vec s = semisimple_part(ad(lie, h.basis_vector(i))).flatten();
    for (std::size_t r = 0; r < n * n; ++r) sys(r, i) = s[r];
  }
  Subspace ker = kernel(sys);
  return sum(fd.one_part, lift(h, ker));
}

}  // namespace

Subspace nilradical(const LieAlgebra& lie, Rng& rng) {
  const std::size_t n = lie.dim();
  if (is_nilpotent(lie)) return Subspace::full(n);
  Subspace result;
  if (is_solvable(lie)) {
    result = nilradical_solvable(lie, rng);
  } else {
    // nil(L) = nil(R) for the solvable radical R: ad_L x maps L into R
    const Subspace rad = killing_radical(lie);
    result = lift(rad, nilradical(subalgebra(lie, rad), rng));
  }
  if (!is_ideal(lie, result) || !is_nilpotent(subalgebra(lie, result)))
    throw std::logic_error("nilradical: contract check failed");
  return result;
}

Subspace nilradical(const LieAlgebra& lie) {
  Rng rng(kDefaultSeed);
  return nilradical(lie, rng);
}

LinearLieAlgebra maximal_torus(const LinearLieAlgebra& der, Rng& rng) {
  if (!der.flagged_derivations()) throw PreconditionError("maximal_torus needs a derivation algebra");
  const Subspace h = cartan_subalgebra(der.abstract(), rng);
  std::vector<Mat> parts;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Mat s = semisimple_part(der.element(h.basis_vector(i)));
    if (!s.is_zero()) parts.push_back(std::move(s));
  }
  LinearLieAlgebra t = LinearLieAlgebra::within(der, parts);
  if (!is_abelian(t.abstract())) throw std::logic_error("maximal_torus: semisimple parts do not commute");
  for (const auto& b : t.basis())
    if (!is_semisimple(b)) throw std::logic_error("maximal_torus: non-semisimple basis element");
  const Subspace all = Subspace::full(t.dim());
  for (int trial = 0; trial < 4 && t.dim() > 1; ++trial)
    if (!is_semisimple(t.element(random_element(all, rng))))
      throw std::logic_error("maximal_torus: non-semisimple combination");
  return t;
}

LinearLieAlgebra maximal_torus(const LinearLieAlgebra& der) {
  Rng rng(kDefaultSeed);
  return maximal_torus(der, rng);
}

std::size_t toric_rank(const LieAlgebra& lie, const Subspace& nilrad, Rng& rng) {
  if (nilradical(lie, rng) != nilrad) throw PreconditionError("toric_rank: subspace is not the nilradical");
  Quotient q = quotient(lie, nilrad);
  return cartan_subalgebra(q.algebra, rng).dim();
}

std::size_t toric_rank(const LieAlgebra& lie, const Subspace& nilrad) {
  Rng rng(kDefaultSeed);
  return toric_rank(lie, nilrad, rng);
}

}  // namespace nilext
