#include "nilext/subspace.hpp"

#include "nilext/errors.hpp"
#include "nilext/linalg.hpp"

#include <stdexcept>

namespace nilext {

Subspace::Subspace(const Mat& spanning) : ambient_(spanning.cols()) {
  auto r = rref(spanning);
  basis_ = std::move(r.reduced);
  pivots_ = std::move(r.pivots);
}

Subspace::Subspace(std::size_t ambient_dim, std::span<const Vec> spanning)
    : Subspace(spanning.empty() ? Mat(0, ambient_dim) : Mat::from_rows(spanning, ambient_dim)) {}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(Mat(0, ambient_dim)); }

Subspace Subspace::full(std::size_t ambient_dim) { return Subspace(Mat::identity(ambient_dim)); }

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionError("vector length does not match ambient dimension");
  // subtract the unique candidate combination and test for zero
  Vec r = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Rat c = v[pivots_[i]];
    if (sgn(c) == 0) continue;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j)
      if (sgn(basis_(i, j)) != 0) r[j] -= c * basis_(i, j);
  }
  return nilext::is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("ambient dimension mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) throw std::domain_error("vector is not in the subspace");
  Vec c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Vec Subspace::combine(const Vec& coords) const {
  if (coords.size() != dim()) throw DimensionError("coordinate length mismatch");
  Vec v = zero_vec(ambient_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(coords[i]) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (sgn(basis_(i, j)) != 0) v[j] += coords[i] * basis_(i, j);
  }
  return v;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  return Subspace(vstack(a.basis(), b.basis()));
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace::zero(n);
  // x = sum_i s_i a_i = sum_j t_j b_j  <=>  [A^T | -B^T] (s, t) = 0
  Mat sys(n, a.dim() + b.dim());
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < a.dim(); ++i) sys(k, i) = a.basis()(i, k);
    for (std::size_t j = 0; j < b.dim(); ++j) sys(k, a.dim() + j) = -b.basis()(j, k);
  }
  Subspace ker = kernel(sys);
  std::vector<Vec> vecs;
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    Vec s = ker.basis_vector(r);
    s.resize(a.dim());
    vecs.push_back(a.combine(s));
  }
  return Subspace(n, vecs);
}

Subspace complement(const Subspace& a) {
  const std::size_t n = a.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : a.pivots()) is_pivot[p] = true;
  std::vector<Vec> vecs;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) vecs.push_back(unit_vec(n, j));
  return Subspace(n, vecs);
}

Subspace complement_within(const Subspace& outer, const Subspace& inner) {
  if (!outer.contains(inner)) throw std::domain_error("complement_within: inner not contained in outer");
  Subspace acc = inner;
  std::vector<Vec> chosen;
  for (std::size_t i = 0; i < outer.dim() && acc.dim() < outer.dim(); ++i) {
    Vec v = outer.basis_vector(i);
    if (acc.contains(v)) continue;
    chosen.push_back(v);
    acc = sum(acc, Subspace(outer.ambient_dim(), std::span<const Vec>(&v, 1)));
  }
  return Subspace(outer.ambient_dim(), chosen);
}

Subspace image(const Mat& map, const Subspace& s) {
  if (map.cols() != s.ambient_dim()) throw DimensionError("image: map/subspace mismatch");
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < s.dim(); ++i) vecs.push_back(map * s.basis_vector(i));
  return Subspace(map.rows(), vecs);
}

Subspace column_space(const Mat& m) { return Subspace(m.transpose()); }

}  // namespace nilext
