// Monad validation, the special pencil fixture, line restriction h^0,
// multi-jumping scans cross-checked against secancy to the fixture
// rulings, global sections and the symplectic solver.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "ilab/monad.hpp"
#include "ilab/rng.hpp"

using namespace ilab;

namespace {

Vec<Fq> pt(const Fq& k, std::initializer_list<long> c) {
  Vec<Fq> v;
  for (long x : c) v.push_back(k.from_int(x));
  return v;
}

// A = (-x1, x0, -x3, x2)^t, B = (x0, x1, x2, x3)
InstantonMonad null_correlation(const Fq& k) {
  std::array<Mat<Fq>, 4> A, B;
  for (int i = 0; i < 4; ++i) {
    A[i] = Mat<Fq>(k, 4, 1);
    B[i] = Mat<Fq>(k, 1, 4);
    B[i].at(0, i) = k.one();
  }
  A[1].at(0, 0) = k.from_int(-1);
  A[0].at(1, 0) = k.one();
  A[3].at(2, 0) = k.from_int(-1);
  A[2].at(3, 0) = k.one();
  return validate_monad(k, A, B, k.p);
}

// the opposite family of x0 x3 = x1 x2: {x0 = u x2, x1 = u x3} plus u = inf
std::vector<PluckerLine> opposite_family(const Fq& k) {
  std::vector<PluckerLine> out;
  for (std::int64_t u = 0; u < k.p; ++u)
    out.push_back(line_through(k, pt(k, {u, 0, 1, 0}), pt(k, {0, u, 0, 1})));
  out.push_back(line_through(k, pt(k, {1, 0, 0, 0}), pt(k, {0, 1, 0, 0})));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("null correlation validates and never multi-jumps") {
  Fq k(5);
  auto m = null_correlation(k);
  CHECK(m.n == 1);
  CHECK(multijump_scan(m, 5).empty());
}

TEST_CASE("violated monad identity names the offending coefficient") {
  Fq k(5);
  std::array<Mat<Fq>, 4> A, B;
  for (int i = 0; i < 4; ++i) {
    A[i] = Mat<Fq>(k, 4, 1);
    B[i] = Mat<Fq>(k, 1, 4);
    B[i].at(0, i) = k.one();
  }
  A[1].at(0, 0) = k.one();  // sign flipped: BA = 2 x0 x1
  A[0].at(1, 0) = k.one();
  A[3].at(2, 0) = k.from_int(-1);
  A[2].at(3, 0) = k.one();
  CHECK_THROWS_WITH_AS(validate_monad(k, A, B, 5), "BA != 0 at coefficient (1,1) of x0x1", error);
}

TEST_CASE("rank failure everywhere is reported as such") {
  Fq k(5);
  auto m = special_thooft_monad(k, 2);
  for (int i = 0; i < 4; ++i)
    for (int r = 0; r < m.A[i].rows(); ++r) m.A[i].at(r, 1) = m.A[i].at(r, 0);
  CHECK_THROWS_WITH_AS(validate_monad(m, 5), "A drops rank at every point", error);
}

TEST_CASE("rank failure at one point names the point") {
  Fq k(5);
  // A = (x0, x1, 0, 0)^t, B = (x1, -x0, 0, 0): BA = 0 but A vanishes on the
  // line x0 = x1 = 0, first hit at (0:0:1:0)
  std::array<Mat<Fq>, 4> A, B;
  for (int i = 0; i < 4; ++i) {
    A[i] = Mat<Fq>(k, 4, 1);
    B[i] = Mat<Fq>(k, 1, 4);
  }
  A[0].at(0, 0) = k.one();
  A[1].at(1, 0) = k.one();
  B[1].at(0, 0) = k.one();
  B[0].at(0, 1) = k.from_int(-1);
  CHECK_THROWS_WITH_AS(validate_monad(k, A, B, 5), "A drops rank at point (0:0:1:0)", error);
}

TEST_CASE("special pencil fixture validates across charges and fields") {
  for (std::int64_t p : {5, 7}) {
    Fq k(p);
    for (int n : {1, 2, 3}) CHECK_NOTHROW(validate_monad(special_thooft_monad(k, n), p));
  }
}

TEST_CASE("rational fixture reduces to the prime fixture") {
  auto mq = special_thooft_monad_q(3);
  CHECK_NOTHROW(validate_monad(mq, 5));
  auto m5 = reduce_monad(mq, 5);
  Fq k(5);
  auto direct = special_thooft_monad(k, 3);
  for (int i = 0; i < 4; ++i) {
    CHECK(m5.A[i].eq(direct.A[i]));
    CHECK(m5.B[i].eq(direct.B[i]));
  }
  // a denominator hitting the modulus is rejected
  RationalMonad bad = mq;
  RationalField kq;
  bad.A[0].at(0, 0) = kq.from_fraction(1, 5);
  CHECK_THROWS_WITH_AS(reduce_monad(bad, 5), doctest::Contains("denominator divisible"), error);
}

TEST_CASE("fixture section rulings") {
  Fq k7(7);
  auto z5 = thooft_section_lines(k7, 5);  // t^6 = 1: every nonzero t
  CHECK(z5.size() == 6);
  require_pairwise_skew(k7, z5, "fixture rulings");
  auto z4 = thooft_section_lines(k7, 4);  // t^5 = -1 has one root mod 7
  CHECK(z4.size() == 1);
  Fq k11(11);
  CHECK(thooft_section_lines(k11, 4).size() == 5);  // five roots mod 11
}

TEST_CASE("restriction h0 on generic, ruling and opposite lines") {
  Fq k(7);
  auto m = special_thooft_monad(k, 5);
  // a line off the quadric x0 x3 = x1 x2
  auto generic = line_through(k, pt(k, {1, 0, 0, 1}), pt(k, {0, 1, -1, 0}));
  CHECK(restricted_h0(m, generic, 0) == 2);
  CHECK(restricted_h0(m, generic, 1) == 4);
  // members of the zero scheme of the distinguished section do not jump
  for (auto& l : thooft_section_lines(k, 5)) CHECK(restricted_h0(m, l, 0) == 2);
  // an opposite ruling jumps with order 5: h0 = 6, and h0(j) = j + 6
  auto opp = opposite_family(k);
  for (auto& l : opp) {
    CHECK(restricted_h0(m, l, 0) == 6);
    CHECK(restricted_h0(m, l, 1) == 7);
    CHECK(restricted_h0(m, l, 3) == 9);  // 2k+3 at k = 3: order >= 5
  }
}

TEST_CASE("h0 growth is consistent with chi on random lines") {
  Fq k(7);
  auto m = special_thooft_monad(k, 4);
  Rng rng(21);
  int seen = 0;
  while (seen < 15) {
    auto a = rng.vector(k, 4), b = rng.vector(k, 4);
    Mat<Fq> two(k, 2, 4);
    two.set_row(0, a);
    two.set_row(1, b);
    if (rank_of(two) != 2) continue;
    ++seen;
    auto l = line_through(k, a, b);
    int prev = 0;
    for (int j = 0; j <= 3; ++j) {
      int h0 = restricted_h0(m, l, j);
      CHECK(h0 >= 2 * j + 2);  // h1 >= 0
      if (j) CHECK(h0 >= prev + 1);
      prev = h0;
    }
  }
}

TEST_CASE("multijump scan equals the opposite family with order 5") {
  Fq k(7);
  auto m = special_thooft_monad(k, 5);
  auto hits = multijump_scan(m, 7);
  auto opp = opposite_family(k);
  REQUIRE(hits.size() == 8);
  for (size_t i = 0; i < hits.size(); ++i) {
    CHECK(hits[i].line == opp[i]);
    CHECK(hits[i].order == 5);
  }
  CHECK(std::is_sorted(hits.begin(), hits.end(),
                       [](const ScanHit& x, const ScanHit& y) { return x.line < y.line; }));
  // every hit is a 6-secant of the section rulings
  auto z = thooft_section_lines(k, 5);
  for (auto& h : hits) CHECK(secancy_profile(k, h.line, z).count == 6);
  // identical results at any worker count
  auto hits8 = multijump_scan(m, 7, 8);
  REQUIRE(hits8.size() == hits.size());
  for (size_t i = 0; i < hits.size(); ++i) {
    CHECK(hits8[i].line == hits[i].line);
    CHECK(hits8[i].order == hits[i].order);
  }
}

TEST_CASE("symplectic structure exists for the fixtures") {
  auto m1 = null_correlation(Fq(5));
  auto s1 = find_symplectic(m1);
  CHECK(s1.solution_dim == 6);  // no constraints for n = 1
  REQUIRE(s1.J.has_value());
  CHECK(rank_of(s1.J->J) == 4);
  auto s2 = find_symplectic(special_thooft_monad(Fq(101), 2));
  REQUIRE(s2.J.has_value());
  CHECK(rank_of(s2.J->J) == 6);
  auto s5 = find_symplectic(special_thooft_monad(Fq(7), 5));
  REQUIRE(s5.J.has_value());
}

TEST_CASE("global sections: stability, pencil, conditions at a point") {
  Fq k(7);
  auto m = special_thooft_monad(k, 5);
  CHECK(global_h0(m, 0) == 0);  // stable
  CHECK(global_h0(m, 1) == 2);  // the special pencil
  auto n1 = null_correlation(Fq(5));
  CHECK(global_h0(n1, 0) == 0);
  // sections of E(1) for the null correlation are antisymmetric 4x4
  // matrices modulo the one-dimensional image of A: 6 - 1 = 5
  CHECK(global_h0(n1, 1) == 5);
  // a base point on the fixture quadric: at least two conditioned sections
  auto N = pt(k, {1, 0, 0, 0});
  int via_n = global_h0(m, 2, &N);
  int plain = global_h0(m, 2);
  CHECK(plain >= 4);
  CHECK(via_n >= 2);
  CHECK(via_n >= plain - 2);
}

TEST_CASE("plane restriction h0") {
  Fq k(7);
  auto m = special_thooft_monad(k, 5);
  // restriction to a plane is stable iff it has no sections
  int h = restricted_h0_plane(m, pt(k, {1, 0, 0, 0}));
  CHECK(h >= 0);
  CHECK(restricted_h0_plane(m, pt(k, {1, 2, 3, 4})) >= 0);
  CHECK_THROWS_WITH_AS(restricted_h0_plane(m, pt(k, {0, 0, 0, 0})), doctest::Contains("zero"),
                       error);
}
