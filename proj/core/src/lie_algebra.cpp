#include "nilext/lie_algebra.hpp"

#include "nilext/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nilext {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels)
    : dim_(dim), table_(dim * (dim > 0 ? dim - 1 : 0) / 2) {
  set_labels(std::move(labels));
}

void LieAlgebra::set_labels(std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) labels.push_back("e" + std::to_string(i + 1));
  }
  if (labels.size() != dim_) throw DimensionError("label count does not match dimension");
  labels_ = std::move(labels);
}

std::size_t LieAlgebra::pair_index(std::size_t i, std::size_t j) const {
  // i < j
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, std::vector<Term> terms) {
  if (i >= dim_ || j >= dim_) throw DimensionError("bracket index out of range");
  if (i == j) throw std::invalid_argument("[e_i, e_i] is zero by antisymmetry");
  bool flip = i > j;
  if (flip) std::swap(i, j);
  std::map<std::size_t, Rat> acc;
  for (auto& t : terms) {
    if (t.index >= dim_) throw DimensionError("bracket term index out of range");
    acc[t.index] += flip ? Rat(-t.coeff) : t.coeff;
  }
  std::vector<Term> clean;
  for (auto& [k, c] : acc)
    if (sgn(c) != 0) clean.push_back({k, c});
  table_[pair_index(i, j)] = std::move(clean);
}

const std::vector<Term>& LieAlgebra::stored_bracket(std::size_t i, std::size_t j) const {
  return table_.at(pair_index(i, j));
}

Vec LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  Vec r = zero_vec(dim_);
  if (i == j) return r;
  const bool flip = i > j;
  for (const auto& t : stored_bracket(std::min(i, j), std::max(i, j)))
    r[t.index] = flip ? Rat(-t.coeff) : t.coeff;
  return r;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionError("element length mismatch");
  Vec r = zero_vec(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j) continue;
      if (sgn(y[j]) == 0) continue;
      const Rat xy = x[i] * y[j];
      if (i < j) {
        for (const auto& t : stored_bracket(i, j)) r[t.index] += xy * t.coeff;
      } else {
        for (const auto& t : stored_bracket(j, i)) r[t.index] -= xy * t.coeff;
      }
    }
  }
  return r;
}

StructureReport verify_structure(const LieAlgebra& lie) {
  StructureReport rep;
  const std::size_t n = lie.dim();
  std::vector<Mat> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_basis(lie, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec s = ads[i] * lie.basis_bracket(j, k) + ads[j] * lie.basis_bracket(k, i) +
                ads[k] * lie.basis_bracket(i, j);
        if (!is_zero(s)) rep.violations.push_back({i, j, k});
      }
  return rep;
}

Mat ad_basis(const LieAlgebra& lie, std::size_t i) {
  const std::size_t n = lie.dim();
  Mat m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (i == j) continue;
    m.set_col(j, lie.basis_bracket(i, j));
  }
  return m;
}

Mat ad(const LieAlgebra& lie, const Vec& x) {
  const std::size_t n = lie.dim();
  if (x.size() != n) throw DimensionError("ad: element length mismatch");
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(x[i]) != 0) m += x[i] * ad_basis(lie, i);
  return m;
}

Subspace product_space(const LieAlgebra& lie, const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != lie.dim() || b.ambient_dim() != lie.dim())
    throw DimensionError("product_space: ambient mismatch");
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Mat ada = ad(lie, a.basis_vector(i));
    for (std::size_t j = 0; j < b.dim(); ++j) {
      Vec v = ada * b.basis_vector(j);
      if (!is_zero(v)) vecs.push_back(std::move(v));
    }
  }
  return Subspace(lie.dim(), vecs);
}

Subspace derived_algebra(const LieAlgebra& lie) {
  auto full = Subspace::full(lie.dim());
  return product_space(lie, full, full);
}

std::vector<Subspace> series(const LieAlgebra& lie, SeriesKind kind) {
  std::vector<Subspace> out{Subspace::full(lie.dim())};
  const auto full = out.front();
  while (out.size() <= lie.dim() + 1) {
    const Subspace& prev = out.back();
    Subspace next = kind == SeriesKind::LowerCentral ? product_space(lie, full, prev)
                                                     : product_space(lie, prev, prev);
    if (next == prev) break;
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<std::size_t> series_dims(const LieAlgebra& lie, SeriesKind kind) {
  std::vector<std::size_t> dims;
  for (const auto& s : series(lie, kind)) dims.push_back(s.dim());
  return dims;
}

bool is_nilpotent(const LieAlgebra& lie) {
  return series(lie, SeriesKind::LowerCentral).back().is_zero();
}

bool is_solvable(const LieAlgebra& lie) { return series(lie, SeriesKind::Derived).back().is_zero(); }

bool is_abelian(const LieAlgebra& lie) { return derived_algebra(lie).is_zero(); }

Subspace centralizer(const LieAlgebra& lie, const Subspace& s) {
  const std::size_t n = lie.dim();
  if (s.ambient_dim() != n) throw DimensionError("centralizer: ambient mismatch");
  // [x, s_b] = -ad(s_b) x
  Mat sys(0, n);
  for (std::size_t b = 0; b < s.dim(); ++b) sys = vstack(sys, ad(lie, s.basis_vector(b)));
  if (sys.rows() == 0) return Subspace::full(n);
  return kernel(sys);
}

Subspace center(const LieAlgebra& lie) { return centralizer(lie, Subspace::full(lie.dim())); }

Subspace normalizer(const LieAlgebra& lie, const Subspace& s) {
  const std::size_t n = lie.dim();
  if (s.ambient_dim() != n) throw DimensionError("normalizer: ambient mismatch");
  // [x, s_b] ∈ S  <=>  P ad(s_b) x = 0 where P projects onto a complement
  // of S along S: P v = v - combine(v at pivots), kept on non-pivot columns
  Subspace comp = complement(s);
  Mat sys(0, n);
  for (std::size_t b = 0; b < s.dim(); ++b) {
    Mat a = ad(lie, s.basis_vector(b));
    Mat proj(comp.dim(), n);
    // reduce each column of a modulo S, then read the non-pivot coordinates
    for (std::size_t col = 0; col < n; ++col) {
      Vec v = a.col(col);
      Vec red = v;
      for (std::size_t r = 0; r < s.dim(); ++r) {
        const Rat c = v[s.pivots()[r]];
        if (sgn(c) == 0) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (sgn(s.basis()(r, k)) != 0) red[k] -= c * s.basis()(r, k);
      }
      for (std::size_t r = 0; r < comp.dim(); ++r) proj(r, col) = red[comp.pivots()[r]];
    }
    sys = vstack(sys, proj);
  }
  if (sys.rows() == 0) return Subspace::full(n);
  return kernel(sys);
}

bool is_subalgebra(const LieAlgebra& lie, const Subspace& s) {
  return s.contains(product_space(lie, s, s));
}

std::optional<std::pair<std::size_t, std::size_t>> ideal_witness(const LieAlgebra& lie,
                                                                 const Subspace& i) {
  if (i.ambient_dim() != lie.dim()) throw DimensionError("ideal check: ambient mismatch");
  for (std::size_t a = 0; a < lie.dim(); ++a) {
    Mat ada = ad_basis(lie, a);
    for (std::size_t b = 0; b < i.dim(); ++b)
      if (!i.contains(ada * i.basis_vector(b))) return std::make_pair(a, b);
  }
  return std::nullopt;
}

bool is_ideal(const LieAlgebra& lie, const Subspace& i) { return !ideal_witness(lie, i); }

Subspace generated_subalgebra(const LieAlgebra& lie, const Subspace& v) {
  Subspace cur = v;
  for (;;) {
    Subspace next = sum(cur, product_space(lie, cur, cur));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

LieAlgebra subalgebra(const LieAlgebra& lie, const Subspace& s) {
  const std::size_t m = s.dim();
  LieAlgebra sub(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Vec br = lie.bracket(s.basis_vector(a), s.basis_vector(b));
      if (!s.contains(br)) throw PreconditionError("subspace is not closed under the bracket");
      Vec c = s.coordinates(br);
      std::vector<Term> terms;
      for (std::size_t k = 0; k < m; ++k)
        if (sgn(c[k]) != 0) terms.push_back({k, c[k]});
      sub.set_bracket(a, b, std::move(terms));
    }
  return sub;
}

NotAnIdealError::NotAnIdealError(std::size_t basis_index, std::size_t ideal_index)
    : PreconditionError("subspace is not an ideal: [e" + std::to_string(basis_index + 1) +
                        ", i" + std::to_string(ideal_index + 1) + "] leaves it"),
      basis_index(basis_index),
      ideal_index(ideal_index) {}

Quotient quotient(const LieAlgebra& lie, const Subspace& ideal) {
  if (auto w = ideal_witness(lie, ideal)) throw NotAnIdealError(w->first, w->second);
  const std::size_t n = lie.dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ideal.pivots()) is_pivot[p] = true;
  Quotient q;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) q.representatives.push_back(j);
  const std::size_t m = q.representatives.size();
  // projection: reduce v modulo I, read the non-pivot coordinates
  q.projection = Mat(m, n);
  for (std::size_t col = 0; col < n; ++col) {
    Vec v = unit_vec(n, col);
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
      const Rat c = v[ideal.pivots()[r]];
      if (sgn(c) == 0) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(ideal.basis()(r, k)) != 0) v[k] -= c * ideal.basis()(r, k);
    }
    for (std::size_t r = 0; r < m; ++r) q.projection(r, col) = v[q.representatives[r]];
  }
  std::vector<std::string> labels;
  for (auto j : q.representatives) labels.push_back(lie.labels()[j]);
  q.algebra = LieAlgebra(m, labels);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Vec img = q.projection * lie.basis_bracket(q.representatives[a], q.representatives[b]);
      std::vector<Term> terms;
      for (std::size_t k = 0; k < m; ++k)
        if (sgn(img[k]) != 0) terms.push_back({k, img[k]});
      q.algebra.set_bracket(a, b, std::move(terms));
    }
  return q;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  // disambiguate clashing labels
  for (std::size_t i = na; i < labels.size(); ++i)
    if (std::find(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(i), labels[i]) !=
        labels.begin() + static_cast<std::ptrdiff_t>(i))
      labels[i] += "'";
  LieAlgebra s(na + nb, labels);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i + 1; j < na; ++j) s.set_bracket(i, j, a.stored_bracket(i, j));
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j) {
      std::vector<Term> terms = b.stored_bracket(i, j);
      for (auto& t : terms) t.index += na;
      s.set_bracket(na + i, na + j, std::move(terms));
    }
  return s;
}

Mat killing_form(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  std::vector<Mat> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_basis(lie, i));
  Mat k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rat t = (ads[i] * ads[j]).trace();
      k(i, j) = t;
      k(j, i) = t;
    }
  return k;
}

Subspace killing_radical(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  Subspace der = derived_algebra(lie);
  if (der.is_zero()) return Subspace::full(n);
  Mat kf = killing_form(lie);
  // rows y_b^T K
  Mat sys(der.dim(), n);
  for (std::size_t b = 0; b < der.dim(); ++b) {
    Vec y = der.basis_vector(b);
    for (std::size_t j = 0; j < n; ++j) {
      Rat s = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (sgn(y[i]) != 0) s += y[i] * kf(i, j);
      sys(b, j) = s;
    }
  }
  return kernel(sys);
}

LieAlgebra change_basis(const LieAlgebra& lie, const Mat& p) {
  const std::size_t n = lie.dim();
  if (p.rows() != n || !p.is_square()) throw DimensionError("change_basis: matrix shape mismatch");
  auto inv = inverse(p);
  if (!inv) throw DimensionError("change_basis: matrix is singular");
  LieAlgebra out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec c = *inv * lie.bracket(p.col(a), p.col(b));
      std::vector<Term> terms;
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(c[k]) != 0) terms.push_back({k, c[k]});
      out.set_bracket(a, b, std::move(terms));
    }
  return out;
}

std::string describe(const LieAlgebra& lie) {
  std::ostringstream os;
  const auto& lab = lie.labels();
  bool any = false;
  for (std::size_t i = 0; i < lie.dim(); ++i)
    for (std::size_t j = i + 1; j < lie.dim(); ++j) {
      const auto& terms = lie.stored_bracket(i, j);
      if (terms.empty()) continue;
      os << (any ? ", " : "") << '[' << lab[i] << ',' << lab[j] << "]=";
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const Rat& c = terms[t].coeff;
        if (t > 0) os << (sgn(c) < 0 ? "-" : "+");
        else if (sgn(c) < 0) os << '-';
        if (abs(c) != 1) os << to_display_string(abs(c)) << '*';
        os << lab[terms[t].index];
      }
      any = true;
    }
  if (!any) os << "abelian";
  return os.str();
}

}  // namespace nilext
