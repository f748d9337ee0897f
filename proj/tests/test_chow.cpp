// Ring axioms and Schubert relations on the line Grassmannian, Chern data
// of the multi-jumping bundle, residual-class evaluation against the
// smooth-congruence form, and the symmetric-square coefficient check.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ilab/chow.hpp"
#include "ilab/field.hpp"

using namespace ilab;

namespace {

using C = ChowClassG;

ChowClassG cls(std::initializer_list<long long> v) {
  ChowClassG r;
  int i = 0;
  for (long long x : v) r.c[i++] = x;
  return r;
}

}  // namespace

TEST_CASE("chow ring: commutative, associative, unital, graded") {
  for (int i = 0; i < 6; ++i) {
    auto bi = chow_basis(static_cast<C::Index>(i));
    CHECK(chow_mul(chow_basis(C::kOne), bi).eq(bi));
    for (int j = 0; j < 6; ++j) {
      auto bj = chow_basis(static_cast<C::Index>(j));
      CHECK(chow_mul(bi, bj).eq(chow_mul(bj, bi)));
      // grading: every term of the product sits in codimension i + j
      int target = chow_codim(static_cast<C::Index>(i)) + chow_codim(static_cast<C::Index>(j));
      auto prod = chow_mul(bi, bj);
      for (int s = 0; s < 6; ++s)
        if (prod.c[s] != 0) CHECK(chow_codim(static_cast<C::Index>(s)) == target);
      for (int l = 0; l < 6; ++l) {
        auto bl = chow_basis(static_cast<C::Index>(l));
        CHECK(chow_mul(chow_mul(bi, bj), bl).eq(chow_mul(bi, chow_mul(bj, bl))));
      }
    }
  }
}

TEST_CASE("chow ring relations") {
  auto t = chow_basis(C::kT), t2 = chow_basis(C::kT2), u = chow_basis(C::kU);
  auto tu = chow_basis(C::kTU), pt = chow_basis(C::kPt);
  CHECK(chow_mul(t, t2).eq(tu.scaled(2)));  // t^3 = 2tu
  CHECK(chow_mul(u, u).eq(pt));             // u^2 = t^2 u
  CHECK(chow_mul(t2.sub(u), u).is_zero());
  CHECK(chow_mul(t2.sub(u), t2.sub(u)).eq(pt));
  CHECK(chow_mul(t2, t2).eq(pt.scaled(2)));
}

TEST_CASE("Chern classes of the multi-jumping bundle") {
  auto c5 = chern_F(5);
  CHECK(c5[0].eq(cls({0, 5, 0, 0, 0, 0})));
  CHECK(c5[1].eq(cls({0, 0, 15, -5, 0, 0})));
  CHECK(c5[2].eq(cls({0, 0, 0, 0, 40, 0})));
  auto c4 = chern_F(4);
  CHECK(c4[0].eq(cls({0, 4, 0, 0, 0, 0})));
  CHECK(c4[1].eq(cls({0, 0, 10, -4, 0, 0})));
  CHECK(c4[2].eq(cls({0, 0, 0, 0, 20, 0})));
  auto c1 = chern_F(1);
  CHECK(c1[0].eq(cls({0, 1, 0, 0, 0, 0})));
  CHECK(c1[1].eq(cls({0, 0, 1, -1, 0, 0})));
  CHECK(c1[2].is_zero());
  CHECK_THROWS_WITH_AS(chern_F(0), "chern_F: charge must be positive", error);
}

TEST_CASE("smooth residual class at the two pinned congruences") {
  auto dp = residual_smooth(4, 2, 2, 1, 1);  // Del Pezzo
  CHECK(dp.tu_coeff == 16);
  CHECK(dp.point_coeff == -12);
  auto km = residual_smooth(5, 4, 4, 5, 2);  // Kummer
  CHECK(km.tu_coeff == 32);
  CHECK(km.point_coeff == -36);
  CHECK(dp.tu_coeff != 0);
  CHECK(km.tu_coeff != 0);
}

TEST_CASE("smooth residual tu-coefficient structure") {
  // at n = 3 the bidegree term dies
  for (long long a = 0; a <= 4; ++a)
    for (long long b = 0; b <= 4; ++b)
      for (long long pi = 0; pi <= 3; ++pi)
        CHECK(residual_smooth(3, a, b, pi, 1).tu_coeff == 8 + 2 * pi - 2);
  // symmetric in the bidegree
  for (long long a = 0; a <= 4; ++a)
    for (long long b = 0; b <= 4; ++b)
      CHECK(residual_smooth(5, a, b, 2, 1).tu_coeff == residual_smooth(5, b, a, 2, 1).tu_coeff);
}

TEST_CASE("congruence identity on the standard surfaces") {
  CHECK(congruence_identity(2, 2, 1, 4, 1));   // Del Pezzo, K^2 = 4
  CHECK(congruence_identity(4, 4, 5, 0, 2));   // Kummer, K^2 = 0
  CHECK(!congruence_identity(2, 2, 1, 4, 2));  // perturbed chi
  CHECK(!congruence_identity(4, 4, 4, 0, 2));
}

TEST_CASE("general residual class reduces to the smooth form at m = 1") {
  int combos = 0;
  for (long long n = 4; n <= 6; ++n)
    for (long long a = 1; a <= 5; ++a)
      for (long long b = 1; b <= 5; ++b)
        for (long long pi = 0; pi <= 4; ++pi)
          for (long long chi = -2; chi <= 3; ++chi) {
            // cotangent numbers consistent with the congruence identity
            long long twice_c1sq =
                a * a + b * b - 3 * (a + b) - 4 * (2 * pi - 2) + 12 * chi;
            if (twice_c1sq % 2 != 0) continue;
            long long c1sq = twice_c1sq / 2;
            auto smooth = residual_smooth(n, a, b, pi, chi);
            CongruenceData d{n, 1, a, b, pi, chi, std::nullopt, c1sq};
            auto viaNoether = residual_class(d);
            CHECK(viaNoether.point_coeff == smooth.point_coeff);
            CHECK(viaNoether.tu_coeff == smooth.tu_coeff);
            d.c2_omega = 12 * chi - c1sq;
            auto direct = residual_class(d);
            CHECK(direct.point_coeff == smooth.point_coeff);
            CHECK(direct.tu_coeff == smooth.tu_coeff);
            ++combos;
          }
  CHECK(combos == 3 * 5 * 5 * 5 * 6);  // the identity fixes parity, never blocks
}

TEST_CASE("general residual class validates its input") {
  CongruenceData d{4, 1, 2, 2, 1, 1, std::nullopt, std::nullopt};
  CHECK_THROWS_WITH_AS(residual_class(d),
                       "residual_class: cotangent Chern data required for the surface part",
                       error);
  d.c2_omega = 8;
  d.m = 0;
  CHECK_THROWS_WITH_AS(residual_class(d), "residual_class: multiplicity must be positive", error);
  d.m = 2;
  d.alpha = -1;
  CHECK_THROWS_WITH_AS(residual_class(d), "residual_class: bidegree must be nonnegative", error);
}

TEST_CASE("higher multiplicity keeps the ambient coefficient bookkeeping") {
  // m enters the tu-coefficient only through n m^2 (alpha + beta) and
  // m^3 [3(alpha+beta) + 2pi - 2]
  CongruenceData d{4, 2, 2, 2, 1, 1, 8, std::nullopt};
  auto rc = residual_class(d);
  CHECK(rc.tu_coeff == 2 * 10 - 4 * 4 * 4 + 8 * (3 * 4 + 0));
}

TEST_CASE("symmetric square coefficient on the plane") {
  CHECK(sym2_omega_check() == 4);
}
