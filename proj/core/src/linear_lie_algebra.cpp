#include "nilext/linear_lie_algebra.hpp"

namespace nilext {

ClosureError::ClosureError(std::size_t a, std::size_t b)
    : PreconditionError("matrix span is not closed: commutator of basis elements " +
                        std::to_string(a + 1) + " and " + std::to_string(b + 1) + " leaves it"),
      a(a),
      b(b) {}

LeibnizError::LeibnizError(std::size_t generator, std::size_t i, std::size_t j)
    : PreconditionError("generator " + std::to_string(generator + 1) +
                        " is not a derivation: Leibniz rule fails on (e" + std::to_string(i + 1) +
                        ", e" + std::to_string(j + 1) + ")"),
      generator(generator),
      i(i),
      j(j) {}

LinearLieAlgebra LinearLieAlgebra::from_spanning(std::size_t n, std::span<const Mat> spanning) {
  LinearLieAlgebra out;
  out.n_ = n;
  std::vector<Vec> flat;
  for (const auto& m : spanning) {
    if (m.rows() != n || m.cols() != n) throw DimensionError("spanning matrix has wrong size");
    flat.push_back(m.flatten());
  }
  out.span_ = Subspace(n * n, flat);
  for (std::size_t i = 0; i < out.span_.dim(); ++i)
    out.basis_.push_back(Mat::unflatten(out.span_.basis_vector(i), n));
  const std::size_t d = out.basis_.size();
  out.abstract_ = LieAlgebra(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      Vec c = commutator(out.basis_[a], out.basis_[b]).flatten();
      if (!out.span_.contains(c)) throw ClosureError(a, b);
      Vec coords = out.span_.coordinates(c);
      std::vector<Term> terms;
      for (std::size_t k = 0; k < d; ++k)
        if (sgn(coords[k]) != 0) terms.push_back({k, coords[k]});
      out.abstract_.set_bracket(a, b, std::move(terms));
    }
  return out;
}

LinearLieAlgebra LinearLieAlgebra::derivations_from_spanning(const LieAlgebra& acted_on,
                                                             std::span<const Mat> spanning) {
  for (std::size_t g = 0; g < spanning.size(); ++g) {
    if (spanning[g].rows() != acted_on.dim() || !spanning[g].is_square())
      throw DimensionError("derivation matrix size does not match algebra dimension");
    if (auto w = leibniz_witness(acted_on, spanning[g])) throw LeibnizError(g, w->first, w->second);
  }
  LinearLieAlgebra out = from_spanning(acted_on.dim(), spanning);
  out.derivations_ = true;
  return out;
}

LinearLieAlgebra LinearLieAlgebra::within(const LinearLieAlgebra& parent,
                                          std::span<const Mat> spanning) {
  for (const auto& m : spanning)
    if (m.rows() != parent.n_ || !parent.contains(m))
      throw PreconditionError("matrix does not lie in the parent linear Lie algebra");
  LinearLieAlgebra out = from_spanning(parent.n_, spanning);
  out.derivations_ = parent.derivations_;
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> leibniz_witness(const LieAlgebra& lie,
                                                                   const Mat& d) {
  const std::size_t n = lie.dim();
  if (d.rows() != n || d.cols() != n) throw DimensionError("derivation matrix size mismatch");
  std::vector<Vec> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(d.col(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec lhs = d * lie.basis_bracket(i, j);
      Vec rhs = lie.bracket(images[i], unit_vec(n, j)) + lie.bracket(unit_vec(n, i), images[j]);
      if (lhs != rhs) return std::make_pair(i, j);
    }
  return std::nullopt;
}

bool is_derivation(const LieAlgebra& lie, const Mat& d) { return !leibniz_witness(lie, d); }

}  // namespace nilext
