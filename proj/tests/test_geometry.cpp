// Line geometry checks against hand-computed configurations on the
// quadric x0 x3 = x1 x2 and small-field enumeration counts.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ilab/geometry.hpp"
#include "ilab/rng.hpp"

using namespace ilab;

namespace {

Vec<Fq> pt(const Fq& k, std::initializer_list<long> c) {
  Vec<Fq> v;
  for (long x : c) v.push_back(k.from_int(x));
  return v;
}

// rulings of x0 x3 = x1 x2 through (t,1,0,0) and (0,0,t,1)
PluckerLine ruling_t(const Fq& k, long t) {
  return line_through(k, pt(k, {t, 1, 0, 0}), pt(k, {0, 0, t, 1}));
}
PluckerLine ruling_inf(const Fq& k) {
  return line_through(k, pt(k, {1, 0, 0, 0}), pt(k, {0, 0, 1, 0}));
}

Vec<Fq> q_x0x3_minus_x1x2(const Fq& k) {
  // basis x0^2, x0x1, x0x2, x0x3, x1^2, x1x2, x1x3, x2^2, x2x3, x3^2
  Vec<Fq> q(10, k.zero());
  q[3] = k.one();
  q[5] = k.neg(k.one());
  return q;
}

}  // namespace

TEST_CASE("plucker coordinates of coordinate lines") {
  Fq k(7);
  auto l01 = line_through(k, pt(k, {1, 0, 0, 0}), pt(k, {0, 1, 0, 0}));
  CHECK(l01.p == pt(k, {1, 0, 0, 0, 0, 0}));
  auto l23 = line_through(k, pt(k, {0, 0, 1, 0}), pt(k, {0, 0, 0, 1}));
  CHECK(l23.p == pt(k, {0, 0, 0, 0, 0, 1}));
  CHECK(!lines_meet(k, l01, l23));
  auto l02 = line_through(k, pt(k, {1, 0, 0, 0}), pt(k, {0, 0, 1, 0}));
  CHECK(lines_meet(k, l01, l02));
  CHECK(line_contains_point(k, l01, pt(k, {3, 4, 0, 0})));
  CHECK(!line_contains_point(k, l01, pt(k, {3, 4, 1, 0})));
}

TEST_CASE("plucker validation") {
  Fq k(7);
  CHECK_THROWS_WITH_AS(plucker_from_coords(k, pt(k, {1, 0, 0, 0, 0, 1})),
                       doctest::Contains("Plucker relation"), error);
  CHECK_THROWS_WITH_AS(plucker_from_coords(k, pt(k, {0, 0, 0, 0, 0, 0})),
                       doctest::Contains("zero"), error);
  // every joined line satisfies the relation
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = rng.vector(k, 4), b = rng.vector(k, 4);
    Mat<Fq> m(k, 2, 4);
    m.set_row(0, a);
    m.set_row(1, b);
    if (rank_of(m) != 2) continue;
    auto l = line_through(k, a, b);
    CHECK(k.is_zero(plucker_relation(k, l.p)));
    auto [x, y] = spanning_points(k, l);
    CHECK(line_through(k, x, y) == l);
    CHECK(line_contains_point(k, l, a));
    CHECK(line_contains_point(k, l, b));
  }
}

TEST_CASE("planes and dual lines") {
  Fq k(7);
  auto l01 = line_through(k, pt(k, {1, 0, 0, 0}), pt(k, {0, 1, 0, 0}));
  auto u = plane_through(k, l01, pt(k, {0, 0, 1, 0}));
  CHECK(u == pt(k, {0, 0, 0, 1}));  // the plane x3 = 0
  CHECK_THROWS_WITH_AS(plane_through(k, l01, pt(k, {2, 5, 0, 0})),
                       doctest::Contains("lies on the line"), error);
  auto back = line_from_planes(k, pt(k, {0, 0, 1, 0}), pt(k, {0, 0, 0, 1}));
  CHECK(back == l01);
  // random consistency: join of two planes through a line returns the line
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = rng.vector(k, 4), b = rng.vector(k, 4), c = rng.vector(k, 4), d = rng.vector(k, 4);
    Mat<Fq> m(k, 2, 4);
    m.set_row(0, a);
    m.set_row(1, b);
    if (rank_of(m) != 2) continue;
    auto l = line_through(k, a, b);
    if (line_contains_point(k, l, c) || line_contains_point(k, l, d)) continue;
    auto u1 = plane_through(k, l, c);
    auto u2 = plane_through(k, l, d);
    if (u1 == u2) continue;
    CHECK(line_from_planes(k, u1, u2) == l);
  }
}

TEST_CASE("transversal through a point") {
  Fq k(7);
  auto l1 = line_through(k, pt(k, {1, 0, 0, 0}), pt(k, {0, 1, 0, 0}));
  auto l2 = line_through(k, pt(k, {0, 0, 1, 0}), pt(k, {0, 0, 0, 1}));
  auto n = pt(k, {1, 2, 3, 4});
  auto tr = transversal_through_point(k, n, l1, l2);
  REQUIRE(tr.has_value());
  CHECK(line_contains_point(k, *tr, n));
  CHECK(lines_meet(k, *tr, l1));
  CHECK(lines_meet(k, *tr, l2));
  // meeting lines: no unique transversal
  auto l3 = line_through(k, pt(k, {1, 0, 0, 0}), pt(k, {0, 0, 1, 0}));
  CHECK(!transversal_through_point(k, n, l1, l3).has_value());
  // incident base point rejected
  CHECK_THROWS_WITH_AS(transversal_through_point(k, pt(k, {1, 1, 0, 0}), l1, l2),
                       doctest::Contains("lies on an input line"), error);
}

TEST_CASE("regulus recovers the standard quadric") {
  Fq k(7);
  auto reg = regulus_through_three(k, ruling_t(k, 0), ruling_t(k, 1), ruling_inf(k));
  CHECK(proj_eq(k, reg.quadric, q_x0x3_minus_x1x2(k)));
  // every parametrized ruling lies on the quadric and meets all three lines
  std::vector<std::pair<FqV, FqV>> params;
  params.emplace_back(k.zero(), k.one());
  for (long t = 0; t < 7; ++t) params.emplace_back(k.one(), k.from_int(t));
  std::vector<PluckerLine> opposite;
  for (auto [s, t] : params) {
    auto m = ruling_at(k, reg, s, t);
    auto [a, b] = spanning_points(k, m);
    CHECK(k.is_zero(quadric_eval(k, reg.quadric, a)));
    CHECK(k.is_zero(quadric_eval(k, reg.quadric, b)));
    CHECK(lines_meet(k, m, ruling_t(k, 0)));
    CHECK(lines_meet(k, m, ruling_t(k, 1)));
    CHECK(lines_meet(k, m, ruling_inf(k)));
    opposite.push_back(m);
  }
  // the opposite family is pairwise skew and has p + 1 members
  require_pairwise_skew(k, opposite, "opposite family");
  CHECK(opposite.size() == 8);
  // intersecting input is rejected
  auto meets = line_through(k, pt(k, {1, 0, 0, 0}), pt(k, {0, 1, 0, 0}));
  CHECK_THROWS_WITH_AS(regulus_through_three(k, ruling_inf(k), meets, ruling_t(k, 1)),
                       doctest::Contains("not skew"), error);
}

TEST_CASE("transversals to four lines: 2, 0, tangent, opposite ruling, infinite") {
  Fq k(7);
  auto l1 = ruling_t(k, 0), l2 = ruling_t(k, 1), l3 = ruling_inf(k);

  SUBCASE("secant line gives two transversals") {
    auto l4 = line_through(k, pt(k, {1, 0, 0, 1}), pt(k, {0, 1, 1, 0}));
    auto res = transversals_to_four(k, l1, l2, l3, l4);
    CHECK(!res.infinite);
    CHECK(!res.double_root);
    REQUIRE(res.lines.size() == 2);
    for (auto& m : res.lines) {
      CHECK(lines_meet(k, m, l1));
      CHECK(lines_meet(k, m, l2));
      CHECK(lines_meet(k, m, l3));
      CHECK(lines_meet(k, m, l4));
    }
  }
  SUBCASE("line avoiding the quadric gives none") {
    auto l4 = line_through(k, pt(k, {1, 0, 0, 1}), pt(k, {0, 1, -1, 0}));
    auto res = transversals_to_four(k, l1, l2, l3, l4);
    CHECK(!res.infinite);
    CHECK(!res.double_root);
    CHECK(res.lines.empty());
  }
  SUBCASE("tangent line gives one transversal with multiplicity") {
    auto l4 = line_through(k, pt(k, {1, 0, 0, 0}), pt(k, {0, 1, -1, 0}));
    auto res = transversals_to_four(k, l1, l2, l3, l4);
    CHECK(!res.infinite);
    CHECK(res.double_root);
    REQUIRE(res.lines.size() == 1);
    CHECK(lines_meet(k, res.lines[0], l4));
  }
  SUBCASE("an opposite ruling is its own double transversal") {
    auto reg = regulus_through_three(k, l1, l2, l3);
    auto m = ruling_at(k, reg, k.one(), k.from_int(3));
    auto res = transversals_to_four(k, l1, l2, l3, m);
    CHECK(!res.infinite);
    CHECK(res.double_root);
    REQUIRE(res.lines.size() == 1);
    CHECK(res.lines[0] == m);
  }
  SUBCASE("a fourth ruling of the same family gives infinitely many") {
    auto res = transversals_to_four(k, l1, l2, l3, ruling_t(k, 2));
    CHECK(res.infinite);
    CHECK(res.lines.empty());
  }
}

TEST_CASE("secancy profile") {
  Fq k(7);
  std::vector<PluckerLine> z = {ruling_t(k, 0), ruling_t(k, 1), ruling_t(k, 2), ruling_inf(k)};
  auto reg = regulus_through_three(k, z[0], z[1], z[3]);
  auto m = ruling_at(k, reg, k.one(), k.from_int(5));
  auto s = secancy_profile(k, m, z);
  CHECK(s.count == 4);
  CHECK(s.met == std::vector<int>{0, 1, 2, 3});
  auto l01 = line_through(k, pt(k, {1, 0, 0, 0}), pt(k, {0, 1, 0, 0}));
  auto s2 = secancy_profile(k, l01, z);
  // l01 meets each ruling where x2 = x3 = 0: only (t,1,0,0) and (1,0,0,0)
  CHECK(s2.count == 4);
  CHECK_THROWS_WITH_AS(secancy_profile(k, z[1], z), doctest::Contains("member"), error);
}

TEST_CASE("projection from a base point") {
  Fq k(7);
  auto n = pt(k, {0, 2, 0, 5});
  auto s = splitting_at(k, n);
  CHECK(s.pivot == 1);
  CHECK(s.comp == std::vector<int>{0, 2, 3});
  CHECK(s.n == pt(k, {0, 1, 0, 6}));  // 5 * inv(2) = 5 * 4 = 20 = 6
  Rng rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    auto y = rng.vector(k, 3);
    if (first_nonzero(k, y) < 0) continue;
    y = proj_normalize(k, y);
    auto l = line_at_y(k, s, y);
    CHECK(line_contains_point(k, l, s.n));
    CHECK(y_point_of_line(k, s, l) == y);
  }
  CHECK_THROWS_WITH_AS(project_from(k, s, pt(k, {0, 1, 0, 6})), doctest::Contains("coincides"),
                       error);
}

TEST_CASE("ngon vertices of a skew configuration") {
  Fq k(7);
  std::vector<PluckerLine> z = {ruling_t(k, 0), ruling_t(k, 1), ruling_t(k, 3), ruling_inf(k)};
  auto n = pt(k, {1, 2, 3, 5});
  // base point off the quadric so no member passes through it
  CHECK(!k.is_zero(quadric_eval(k, q_x0x3_minus_x1x2(k), n)));
  auto verts = ngon_vertices(k, z, n);
  REQUIRE(verts.size() == 6);  // C(4,2)
  auto s = splitting_at(k, n);
  for (auto& v : verts) {
    auto l = line_at_y(k, s, v.y);
    CHECK(lines_meet(k, l, z[v.i]));
    CHECK(lines_meet(k, l, z[v.j]));
  }
  // a base point on one member is rejected with its index
  CHECK_THROWS_WITH_AS(ngon_vertices(k, z, pt(k, {1, 1, 0, 0})), doctest::Contains("line 1"),
                       error);
  // a non-skew configuration is rejected with the offending pair
  std::vector<PluckerLine> bad = {ruling_t(k, 0),
                                  line_through(k, pt(k, {0, 1, 0, 0}), pt(k, {1, 0, 1, 0}))};
  CHECK_THROWS_WITH_AS(ngon_vertices(k, bad, n), doctest::Contains("0 and 1"), error);
}

TEST_CASE("enumeration counts") {
  Fq k3(3);
  auto pts = enumerate_proj_points(k3, 3);
  CHECK(pts.size() == 40);  // (3^4 - 1) / 2
  auto lines3 = enumerate_lines(k3);
  CHECK(lines3.size() == static_cast<size_t>(count_lines(3)));
  CHECK(lines3.size() == 130);
  for (auto& l : lines3) CHECK(k3.is_zero(plucker_relation(k3, l.p)));
  CHECK(std::is_sorted(lines3.begin(), lines3.end()));

  Fq k7(7);
  auto lines7 = enumerate_lines(k7);
  CHECK(lines7.size() == 2850);
  CHECK(static_cast<std::int64_t>(lines7.size()) == count_lines(7));
}
