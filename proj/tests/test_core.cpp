// Exact linear algebra and homogeneous polynomial layer: planted-rank
// oracles, determinant/rank consistency, solver behaviour on consistent and
// inconsistent systems, ring axioms for polynomial arithmetic.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ilab/matrix.hpp"
#include "ilab/poly.hpp"
#include "ilab/rng.hpp"

using namespace ilab;

TEST_CASE("prime field basics") {
  PrimeField f7(7);
  CHECK(f7.add(5, 4) == 2);
  CHECK(f7.mul(3, 5) == 1);
  CHECK(f7.inv(3) == 5);
  CHECK(f7.from_int(-1) == 6);
  CHECK_THROWS_AS((void)f7.inv(0), error);
  CHECK_THROWS_AS(PrimeField(9), error);
  CHECK_THROWS_AS(PrimeField(2), error);
}

TEST_CASE("rational field basics") {
  RationalField q;
  auto third = q.from_fraction(2, 6);
  CHECK(q.eq(third, q.from_fraction(1, 3)));
  CHECK(q.str(q.add(third, q.from_fraction(1, 6))) == "1/2");
  CHECK_THROWS_AS((void)q.inv(q.zero()), error);
}

TEST_CASE("identity reduces to itself") {
  PrimeField f5(5);
  auto m = Mat<PrimeField>::identity(f5, 3);
  auto red = reduce(m);
  CHECK(red.rank == 3);
  CHECK(red.kernel.cols() == 0);
  REQUIRE(red.det.has_value());
  CHECK(*red.det == 1);
}

TEST_CASE("rank-1 square has zero determinant") {
  PrimeField f7(7);
  Mat<PrimeField> m(f7, 2, 2);
  m.at(0, 0) = 1; m.at(0, 1) = 2;
  m.at(1, 0) = 2; m.at(1, 1) = 4;
  auto red = reduce(m);
  CHECK(red.rank == 1);
  CHECK(*red.det == 0);
  CHECK(red.kernel.cols() == 1);
}

TEST_CASE("planted kernel of dimension 3 is recovered") {
  // M = P * Q with P 10x9 and Q 9x12, both of full rank 9, so rank M = 9
  // and the right kernel is 3-dimensional.
  PrimeField f7(7);
  Rng rng(0x9e3779b97f4a7c15ull);
  Mat<PrimeField> p(f7, 10, 9), q(f7, 9, 12);
  do { p = rng.matrix(f7, 10, 9); } while (rank_of(p) != 9);
  do { q = rng.matrix(f7, 9, 12); } while (rank_of(q) != 9);
  auto m = p.mul(q);
  auto red = reduce(m);
  CHECK(red.rank == 9);
  CHECK(red.kernel.cols() == 3);
  for (int c = 0; c < red.kernel.cols(); ++c) {
    auto v = red.kernel.col(c);
    auto mv = m.apply(v);
    for (auto& x : mv) CHECK(x == 0);
  }
}

TEST_CASE("det vanishes exactly when rank drops") {
  PrimeField f7(7);
  Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng.below(6));
    auto m = rng.matrix(f7, n, n);
    auto red = reduce(m);
    CHECK((red.rank == n) == (*red.det != 0));
  }
}

TEST_CASE("rational elimination stays exact") {
  RationalField q;
  Mat<RationalField> m(q, 2, 2);
  m.at(0, 0) = q.from_int(1);   m.at(0, 1) = q.from_fraction(1, 2);
  m.at(1, 0) = q.from_fraction(1, 3); m.at(1, 1) = q.from_fraction(1, 4);
  auto red = reduce(m);
  CHECK(red.rank == 2);
  CHECK(q.str(*red.det) == "1/12");
}

TEST_CASE("solver reports particular plus kernel") {
  PrimeField f5(5);
  Mat<PrimeField> m(f5, 1, 2);
  m.at(0, 0) = 1; m.at(0, 1) = 1;
  auto s = solve(m, Vec<PrimeField>{1});
  REQUIRE(s.consistent);
  CHECK(m.apply(s.particular)[0] == 1);
  CHECK(s.kernel.cols() == 1);
}

TEST_CASE("solver flags inconsistent systems") {
  PrimeField f5(5);
  Mat<PrimeField> m(f5, 2, 1);
  m.at(0, 0) = 1; m.at(1, 0) = 1;
  auto s = solve(m, Vec<PrimeField>{1, 2});
  CHECK(!s.consistent);
}

TEST_CASE("solution sets agree with direct checks on random systems") {
  PrimeField f101(101);
  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    int rows = 1 + static_cast<int>(rng.below(6));
    int cols = 1 + static_cast<int>(rng.below(6));
    auto a = rng.matrix(f101, rows, cols);
    auto x0 = rng.vector(f101, cols);
    auto b = a.apply(x0);
    auto s = solve(a, b);
    REQUIRE(s.consistent);
    auto bx = a.apply(s.particular);
    for (int i = 0; i < rows; ++i) CHECK(bx[i] == b[i]);
    for (int c = 0; c < s.kernel.cols(); ++c) {
      auto kv = a.apply(s.kernel.col(c));
      for (auto& x : kv) CHECK(x == 0);
    }
    CHECK(s.kernel.cols() == cols - rank_of(a));
  }
}

TEST_CASE("mixed moduli are rejected") {
  PrimeField f5(5), f7(7);
  Mat<PrimeField> a(f5, 1, 1), b(f7, 1, 1);
  CHECK_THROWS_WITH_AS(a.mul(b), doctest::Contains("mixed fields"), error);
}

TEST_CASE("quotient coordinates") {
  PrimeField f5(5);
  Mat<PrimeField> span(f5, 3, 1);
  span.at(0, 0) = 1; span.at(1, 0) = 1; span.at(2, 0) = 0;
  Quotient<PrimeField> q(f5, span);
  CHECK(q.dim() == 2);
  CHECK(q.contains(Vec<PrimeField>{2, 2, 0}));
  CHECK(!q.contains(Vec<PrimeField>{1, 0, 0}));
  auto coords = q.project(Vec<PrimeField>{1, 0, 3});
  auto back = q.lift(coords);
  // lift differs from the input by an element of the subspace
  Vec<PrimeField> diff(3);
  for (int i = 0; i < 3; ++i) diff[i] = f5.sub(back[i], f5.from_int(i == 0 ? 1 : (i == 2 ? 3 : 0)));
  CHECK(q.contains(diff));
  CHECK(q.project(back) == coords);
}

TEST_CASE("monomial indexing is a bijection") {
  for (int nv : {1, 2, 3, 4, 6}) {
    for (int d : {0, 1, 2, 3, 5}) {
      auto list = mono_list(nv, d);
      CHECK(static_cast<int>(list.size()) == mono_count(nv, d));
      for (size_t i = 0; i < list.size(); ++i) CHECK(mono_index(list[i]) == static_cast<int>(i));
    }
  }
}

TEST_CASE("restriction of x0^2 to a parametrized line is s^2") {
  PrimeField f7(7);
  GradedPoly<PrimeField> p(f7, 4, 2);
  p.set_coeff({2, 0, 0, 0}, 1);
  // x = s*(1,0,0,0) + t*(0,1,0,0)
  Mat<PrimeField> sub(f7, 4, 2);
  sub.at(0, 0) = 1; sub.at(1, 1) = 1;
  auto r = p.linear_substitute(sub);
  CHECK(r.nvars() == 2);
  CHECK(r.coeff({2, 0}) == 1);
  CHECK(r.coeff({1, 1}) == 0);
  CHECK(r.coeff({0, 2}) == 0);
}

TEST_CASE("polynomial products: commutative, distributive, eval-compatible") {
  PrimeField f11(11);
  Rng rng(99);
  for (int trial = 0; trial < 12; ++trial) {
    int nv = 2 + static_cast<int>(rng.below(5));  // up to 6 variables
    int da = static_cast<int>(rng.below(4));
    int db = static_cast<int>(rng.below(3));
    GradedPoly<PrimeField> a(f11, nv, da), b(f11, nv, db), c(f11, nv, db);
    for (int i = 0; i < a.terms(); ++i) a.coeff_at(i) = rng.element(f11);
    for (int i = 0; i < b.terms(); ++i) b.coeff_at(i) = rng.element(f11);
    for (int i = 0; i < c.terms(); ++i) c.coeff_at(i) = rng.element(f11);
    CHECK(a.mul(b).eq(b.mul(a)));
    CHECK(a.mul(b.add(c)).eq(a.mul(b).add(a.mul(c))));
    auto x = rng.vector(f11, nv);
    CHECK(a.mul(b).eval(x) == f11.mul(a.eval(x), b.eval(x)));
  }
}

TEST_CASE("substitution commutes with evaluation") {
  PrimeField f7(7);
  Rng rng(123);
  for (int trial = 0; trial < 10; ++trial) {
    GradedPoly<PrimeField> p(f7, 4, 3);
    for (int i = 0; i < p.terms(); ++i) p.coeff_at(i) = rng.element(f7);
    auto l = rng.matrix(f7, 4, 2);
    auto q = p.linear_substitute(l);
    auto y = rng.vector(f7, 2);
    CHECK(q.eval(y) == p.eval(l.apply(y)));
  }
}

TEST_CASE("polynomial determinant of the generic 2x2") {
  PrimeField f7(7);
  auto lin = [&](int var) {
    Vec<PrimeField> c(4, 0);
    c[var] = 1;
    return GradedPoly<PrimeField>::linear(f7, c);
  };
  std::vector<std::vector<GradedPoly<PrimeField>>> m{{lin(0), lin(1)}, {lin(2), lin(3)}};
  auto d = poly_det(m);
  CHECK(d.degree() == 2);
  CHECK(d.coeff({1, 0, 0, 1}) == 1);
  CHECK(d.coeff({0, 1, 1, 0}) == 6);  // -1 mod 7
}

TEST_CASE("inhomogeneous polynomial input is rejected") {
  PrimeField f5(5);
  GradedPoly<PrimeField> a(f5, 3, 2), b(f5, 3, 1);
  CHECK_THROWS_WITH_AS(a.add(b), doctest::Contains("inhomogeneous"), error);
}
