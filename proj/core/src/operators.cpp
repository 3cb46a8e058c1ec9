#include "nilext/operators.hpp"

#include "nilext/errors.hpp"
#include "nilext/linalg.hpp"
#include "nilext/subspace.hpp"

#include <stdexcept>

namespace nilext {

Poly charpoly(const Mat& m) {
  if (!m.is_square()) throw DimensionError("charpoly of non-square matrix");
  const std::size_t n = m.rows();
  Mat h = m;
  // reduce to upper Hessenberg form by elementary similarity transforms
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::size_t piv = n;
    std::size_t piv_bits = 0;
    for (std::size_t i = k; i < n; ++i) {
      if (sgn(h(i, k - 1)) == 0) continue;
      std::size_t bits = bit_size(h(i, k - 1));
      if (piv == n || bits < piv_bits) {
        piv = i;
        piv_bits = bits;
      }
    }
    if (piv == n) continue;
    if (piv != k) {
      h.swap_rows(piv, k);
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, k));
    }
    const Rat inv = 1 / h(k, k - 1);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(h(i, k - 1)) == 0) continue;
      const Rat u = h(i, k - 1) * inv;
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(h(k, j)) != 0) h(i, j) -= u * h(k, j);
      for (std::size_t r = 0; r < n; ++r)
        if (sgn(h(r, i)) != 0) h(r, k) += u * h(r, i);
    }
  }
  // p_k = det(xI - H[0..k, 0..k])
  std::vector<Poly> p;
  p.reserve(n + 1);
  p.push_back(Poly::constant(1));
  for (std::size_t k = 1; k <= n; ++k) {
    Poly pk = Poly::linear(h(k - 1, k - 1)) * p[k - 1];
    Rat t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t *= h(k - i, k - i - 1);
      if (sgn(t) == 0) break;
      const Rat& coef = h(k - i - 1, k - 1);
      if (sgn(coef) != 0) pk -= (t * coef) * p[k - i - 1];
    }
    p.push_back(std::move(pk));
  }
  return p[n];
}

Poly minpoly(const Mat& m) {
  if (!m.is_square()) throw DimensionError("minpoly of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Poly::constant(1);
  // columns of `krylov` are vec(m^0), vec(m^1), ...
  std::vector<Vec> powers;
  Mat cur = Mat::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    powers.push_back(cur.flatten());
    Mat sys(n * n, powers.size());
    for (std::size_t j = 0; j < powers.size(); ++j)
      for (std::size_t i = 0; i < n * n; ++i) sys(i, j) = powers[j][i];
    Subspace rel = kernel(sys);
    if (!rel.is_zero()) {
      // first dependency is one-dimensional; its RREF row has leading
      // coefficient on the lowest power, normalize on the top power
      Vec c = rel.basis_vector(0);
      return Poly(c).monic();
    }
    cur = cur * m;
  }
  throw std::logic_error("minpoly: no dependency found up to degree n");
}

std::size_t jordan_chevalley_iteration_bound(std::size_t n) {
  std::size_t bound = 0;
  while ((std::size_t{1} << bound) < n) ++bound;
  return bound + 1;
}

JordanChevalley jordan_chevalley(const Mat& m) {
  if (!m.is_square()) throw DimensionError("jordan_chevalley of non-square matrix");
  const std::size_t n = m.rows();
  JordanChevalley out;
  if (n == 0) {
    out.semisimple = out.nilpotent = m;
    return out;
  }
  const Poly chi = charpoly(m);
  const Poly g = squarefree_part(chi);
  const Poly h = inverse_mod(g.derivative(), g);
  Poly p = Poly::x() % chi;
  const std::size_t cap = jordan_chevalley_iteration_bound(n);
  for (;;) {
    Poly gp = compose_mod(g, p, chi);
    if (gp.is_zero()) break;
    if (out.iterations == cap)
      throw std::logic_error("jordan_chevalley: Newton iteration did not converge");
    p = (p - gp * compose_mod(h, p, chi)) % chi;
    ++out.iterations;
  }
  out.witness = p;
  out.semisimple = p(m);
  out.nilpotent = m - out.semisimple;
  return out;
}

Mat semisimple_part(const Mat& m) { return jordan_chevalley(m).semisimple; }

bool is_nilpotent(const Mat& m) {
  if (!m.is_square()) throw DimensionError("is_nilpotent of non-square matrix");
  return power(m, m.rows()).is_zero();
}

bool is_semisimple(const Mat& m) {
  if (!m.is_square()) throw DimensionError("is_semisimple of non-square matrix");
  return is_squarefree(minpoly(m));
}

}  // namespace nilext
