#include "nilext/extension.hpp"

namespace nilext {

Extension semidirect_sum(const LinearLieAlgebra& d, const LieAlgebra& n,
                         const std::string& torus_label) {
  if (d.matrix_size() != n.dim()) throw DimensionError("acting matrices do not match algebra dimension");
  for (std::size_t g = 0; g < d.dim(); ++g)
    if (auto w = leibniz_witness(n, d.basis()[g])) throw LeibnizError(g, w->first, w->second);

  const std::size_t m = d.dim(), k = n.dim();
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a)
    labels.push_back(m == 1 ? torus_label : torus_label + std::to_string(a + 1));
  labels.insert(labels.end(), n.labels().begin(), n.labels().end());

  Extension ext;
  ext.total = LieAlgebra(m + k, labels);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) ext.total.set_bracket(a, b, d.abstract().stored_bracket(a, b));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Term> terms;
      for (std::size_t r = 0; r < k; ++r)
        if (sgn(d.basis()[a](r, j)) != 0) terms.push_back({m + r, d.basis()[a](r, j)});
      ext.total.set_bracket(a, m + j, std::move(terms));
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      std::vector<Term> terms = n.stored_bracket(i, j);
      for (auto& t : terms) t.index += m;
      ext.total.set_bracket(m + i, m + j, std::move(terms));
    }

  std::vector<Vec> nil, comp;
  for (std::size_t j = 0; j < k; ++j) nil.push_back(unit_vec(m + k, m + j));
  for (std::size_t a = 0; a < m; ++a) comp.push_back(unit_vec(m + k, a));
  ext.nilideal = Subspace(m + k, nil);
  ext.complement = Subspace(m + k, comp);
  ext.provenance.method = "semidirect";
  ext.provenance.generators = d.basis();
  return ext;
}

}  // namespace nilext
