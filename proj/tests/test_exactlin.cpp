#include "nilext/linalg.hpp"
#include "nilext/operators.hpp"
#include "nilext/poly.hpp"
#include "nilext/subspace.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace nilext;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rat("3/6") == Rat(1, 2));
  CHECK(parse_rat("-4") == Rat(-4));
  CHECK(parse_rat("-10/4") == Rat(-5, 2));
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("2/x"), std::invalid_argument);
  CHECK(to_fraction_string(Rat(2)) == "2/1");
  CHECK(to_fraction_string(Rat(-3) / 9) == "-1/3");
  CHECK(to_display_string(Rat(2)) == "2");
}

TEST_CASE("matrix arithmetic") {
  Mat a{{1, 2}, {3, 4}};
  Mat b{{0, 1}, {1, 0}};
  CHECK(Mat::identity(2) * a == a);
  CHECK(a * b == Mat{{2, 1}, {4, 3}});
  CHECK(a.transpose() == Mat{{1, 3}, {2, 4}});
  CHECK(a.trace() == 5);
  CHECK(commutator(a, b) == a * b - b * a);
  CHECK(power(b, 2) == Mat::identity(2));
  CHECK(Mat::unflatten(a.flatten(), 2) == a);
  CHECK(a * Vec{1, 1} == Vec{3, 7});
}

TEST_CASE("rref, rank and kernel on random matrices") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const std::size_t rows = 2 + t % 5, cols = 2 + (t * 7) % 6, r = 1 + t % 4;
    Mat m = (t % 2) ? testing::random_mat(rng, rows, cols) : testing::random_low_rank(rng, rows, cols, r);
    RrefResult once = rref(m);
    RrefResult twice = rref(once.reduced);
    CHECK(twice.reduced == once.reduced);
    CHECK(twice.pivots == once.pivots);
    CHECK(rank(m) == oracle::dense_rank(testing::dense(m)));
    Subspace ker = kernel(m);
    CHECK(ker.dim() + rank(m) == cols);
    for (std::size_t i = 0; i < ker.dim(); ++i) CHECK(is_zero(m * ker.basis_vector(i)));
  }
}

TEST_CASE("pivot choice prefers the smallest entry") {
  Mat m{{7, 1}, {1, 0}};
  RrefResult r = rref(m);
  CHECK(r.reduced == Mat::identity(2));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("solve and inverse") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    Mat p = testing::random_invertible(rng, 4);
    auto inv = inverse(p);
    REQUIRE(inv);
    CHECK(p * *inv == Mat::identity(4));
    Vec b{1, -2, 3, 0}, x;
    REQUIRE(solve(p, b, x));
    CHECK(p * x == b);
  }
  Mat singular{{1, 2}, {2, 4}};
  CHECK_FALSE(inverse(singular));
  Vec x;
  CHECK_FALSE(solve(singular, Vec{1, 0}, x));
  CHECK(solve(singular, Vec{1, 2}, x));
  CHECK(singular * x == Vec{1, 2});
}

TEST_CASE("subspaces are canonical") {
  Subspace a(3, std::vector<Vec>{{1, 1, 0}, {0, 1, 1}});
  Subspace b(3, std::vector<Vec>{{1, 2, 1}, {1, 0, -1}});
  CHECK(a == b);
  CHECK(a.contains(Vec{2, 3, 1}));
  CHECK_FALSE(a.contains(Vec{1, 0, 0}));
  Vec v{2, 3, 1};
  CHECK(a.combine(a.coordinates(v)) == v);
  CHECK_THROWS_AS(a.coordinates(Vec{1, 0, 0}), std::domain_error);
}

TEST_CASE("sum, intersection and complements") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 6;
    Subspace a(testing::random_low_rank(rng, 4, n, 1 + t % 4));
    Subspace b(testing::random_low_rank(rng, 4, n, 1 + (t / 3) % 4));
    Subspace s = sum(a, b), i = intersection(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(s.contains(a));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    Subspace c = complement(a);
    CHECK(c.dim() + a.dim() == n);
    CHECK(sum(a, c).is_full());
    Subspace cw = complement_within(s, a);
    CHECK(intersection(cw, a).is_zero());
    CHECK(sum(cw, a) == s);
  }
  Subspace line(2, std::vector<Vec>{{1, 0}});
  Subspace other(2, std::vector<Vec>{{0, 1}});
  CHECK_THROWS(complement_within(line, other));
}

TEST_CASE("image and column space") {
  Mat m{{1, 0, 1}, {0, 1, 1}, {0, 0, 0}};
  CHECK(column_space(m).dim() == 2);
  Subspace s(3, std::vector<Vec>{{1, 0, 0}});
  CHECK(image(m, s) == Subspace(3, std::vector<Vec>{{1, 0, 0}}));
}

TEST_CASE("polynomial arithmetic") {
  Poly p{-1, 0, 1};  // x^2 - 1
  Poly q{1, 1};      // x + 1
  auto [quo, rem] = divmod(p, q);
  CHECK(quo == Poly{-1, 1});
  CHECK(rem.is_zero());
  CHECK(gcd(p, Poly{2, 2}) == q);
  CHECK(gcd(Poly{}, Poly{}).is_zero());
  CHECK(p(Rat(3)) == 8);
  CHECK(p.derivative() == Poly{0, 2});
  Poly m{1, 0, 1};  // x^2 + 1
  Poly inv = inverse_mod(Poly{0, 1}, m);
  CHECK((Poly{0, 1} * inv) % m == Poly::constant(1));
  CHECK_THROWS_AS(inverse_mod(q, p), std::domain_error);
  CHECK(compose_mod(Poly{0, 0, 1}, Poly{1, 1}, Poly{0, 0, 0, 1}) == Poly{1, 2, 1});
}

TEST_CASE("squarefree part keeps the roots") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> root(-3, 3), mult(1, 3);
  for (int t = 0; t < 30; ++t) {
    Poly p = Poly::constant(Rat(1 + t % 3));
    for (int f = 0; f < 3; ++f) {
      Poly lin = Poly::linear(root(rng));
      for (int e = mult(rng); e > 0; --e) p = p * lin;
    }
    Poly s = squarefree_part(p);
    CHECK(gcd(s, s.derivative()).degree() == 0);
    CHECK((p % s).is_zero());
    CHECK(is_squarefree(s));
    for (int r = -3; r <= 3; ++r) CHECK((p(Rat(r)) == 0) == (s(Rat(r)) == 0));
  }
}

TEST_CASE("charpoly agrees with the Faddeev-LeVerrier oracle") {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + t % 7;
    Mat m = (t % 3 == 0) ? testing::random_jordan_conjugate(rng, n) : testing::random_mat(rng, n, n);
    Poly cp = charpoly(m);
    auto ref = oracle::faddeev_leverrier(testing::dense(m));
    REQUIRE(cp.degree() == static_cast<long>(n));
    for (std::size_t i = 0; i <= n; ++i) CHECK(cp.coeff(i) == ref[i]);
    CHECK(cp(m).is_zero());
    Poly mp = minpoly(m);
    CHECK(mp(m).is_zero());
    CHECK((cp % mp).is_zero());
  }
  CHECK(minpoly(Mat::identity(3)) == Poly::linear(1));
  CHECK(charpoly(Mat::zero(2, 2)) == Poly{0, 0, 1});
}

namespace {

void check_jordan_chevalley(const Mat& m) {
  const std::size_t n = m.rows();
  JordanChevalley jc = jordan_chevalley(m);
  CHECK(jc.semisimple + jc.nilpotent == m);
  CHECK(jc.semisimple * jc.nilpotent == jc.nilpotent * jc.semisimple);
  CHECK(power(jc.nilpotent, n).is_zero());
  CHECK(is_squarefree(minpoly(jc.semisimple)));
  CHECK(jc.witness(m) == jc.semisimple);
  CHECK(jc.witness.degree() < static_cast<long>(n));
  CHECK(jc.iterations <= jordan_chevalley_iteration_bound(n));
}

}  // namespace

TEST_CASE("Jordan-Chevalley on random 5x5 matrices") {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 100; ++t) check_jordan_chevalley(testing::random_mat(rng, 5, 5));
}

TEST_CASE("Jordan-Chevalley with repeated eigenvalues") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) check_jordan_chevalley(testing::random_jordan_conjugate(rng, 2 + t % 5));
  Mat j{{2, 1, 0}, {0, 2, 0}, {0, 0, 3}};
  JordanChevalley jc = jordan_chevalley(j);
  CHECK(jc.semisimple == Mat{{2, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  CHECK(jc.nilpotent == Mat{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
}

TEST_CASE("Jordan-Chevalley commutes with similarity") {
  std::mt19937_64 rng(18);
  for (int t = 0; t < 20; ++t) {
    Mat m = testing::random_jordan_conjugate(rng, 4);
    Mat p = testing::random_invertible(rng, 4);
    Mat pinv = *inverse(p);
    JordanChevalley a = jordan_chevalley(m);
    JordanChevalley b = jordan_chevalley(pinv * m * p);
    CHECK(b.semisimple == pinv * a.semisimple * p);
    CHECK(b.nilpotent == pinv * a.nilpotent * p);
  }
}

TEST_CASE("nilpotent and semisimple predicates") {
  CHECK(is_nilpotent(Mat{{0, 1}, {0, 0}}));
  CHECK_FALSE(is_nilpotent(Mat{{1, 1}, {0, 0}}));
  CHECK(is_semisimple(Mat{{0, 1}, {-1, 0}}));
  CHECK_FALSE(is_semisimple(Mat{{1, 1}, {0, 1}}));
  CHECK(jordan_chevalley_iteration_bound(5) == 4);
  CHECK(jordan_chevalley_iteration_bound(1) == 1);
}
