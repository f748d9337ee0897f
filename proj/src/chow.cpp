// Schubert calculus on the line Grassmannian, the Chern data of the
// multi-jumping bundle, the blow-up residual class and the symmetric
// square check, all in exact integer arithmetic.
#include "ilab/chow.hpp"

#include <map>

#include "ilab/field.hpp"

namespace ilab {

namespace {

long long choose2(long long n) { return n * (n - 1) / 2; }
long long choose3(long long n) { return n * (n - 1) * (n - 2) / 6; }

// 6 x 6 multiplication table on {1, t, t2, u, tu, pt}; entries follow from
// t^3 = 2tu, u^2 = t^2 u = pt and dimension (codim > 4 vanishes)
const std::array<std::array<ChowClassG, 6>, 6>& mul_table() {
  static const auto table = [] {
    std::array<std::array<ChowClassG, 6>, 6> tb{};
    auto set = [&tb](int a, int b, ChowClassG v) {
      tb[a][b] = v;
      tb[b][a] = v;
    };
    auto basis = [](int i) {
      ChowClassG v;
      v.c[i] = 1;
      return v;
    };
    using C = ChowClassG;
    for (int i = 0; i < 6; ++i) set(C::kOne, i, basis(i));
    set(C::kT, C::kT, basis(C::kT2));
    set(C::kT, C::kT2, basis(C::kTU).scaled(2));
    set(C::kT, C::kU, basis(C::kTU));
    set(C::kT, C::kTU, basis(C::kPt));
    set(C::kT2, C::kT2, basis(C::kPt).scaled(2));
    set(C::kT2, C::kU, basis(C::kPt));
    set(C::kU, C::kU, basis(C::kPt));
    return tb;
  }();
  return table;
}

}  // namespace

ChowClassG ChowClassG::add(const ChowClassG& o) const {
  ChowClassG r;
  for (int i = 0; i < 6; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

ChowClassG ChowClassG::sub(const ChowClassG& o) const {
  ChowClassG r;
  for (int i = 0; i < 6; ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

ChowClassG ChowClassG::scaled(long long s) const {
  ChowClassG r;
  for (int i = 0; i < 6; ++i) r.c[i] = c[i] * s;
  return r;
}

bool ChowClassG::is_zero() const {
  for (long long x : c)
    if (x != 0) return false;
  return true;
}

ChowClassG chow_basis(ChowClassG::Index i) {
  ChowClassG v;
  v.c[i] = 1;
  return v;
}

ChowClassG chow_mul(const ChowClassG& a, const ChowClassG& b) {
  ChowClassG r;
  for (int i = 0; i < 6; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < 6; ++j) {
      if (b.c[j] == 0) continue;
      const ChowClassG& e = mul_table()[i][j];
      for (int s = 0; s < 6; ++s) r.c[s] += a.c[i] * b.c[j] * e.c[s];
    }
  }
  return r;
}

int chow_codim(ChowClassG::Index i) {
  switch (i) {
    case ChowClassG::kOne: return 0;
    case ChowClassG::kT: return 1;
    case ChowClassG::kT2:
    case ChowClassG::kU: return 2;
    case ChowClassG::kTU: return 3;
    default: return 4;
  }
}

std::array<ChowClassG, 3> chern_F(int n) {
  if (n < 1) fail(errc::validation, "chern_F: charge must be positive");
  std::array<ChowClassG, 3> c{};
  c[0].c[ChowClassG::kT] = n;
  c[1].c[ChowClassG::kT2] = choose2(n + 1);
  c[1].c[ChowClassG::kU] = -n;
  c[2].c[ChowClassG::kTU] = 2 * choose3(n + 1);
  return c;
}

ResidualClass residual_class(const CongruenceData& d) {
  if (d.n < 1) fail(errc::validation, "residual_class: charge must be positive");
  if (d.m < 1) fail(errc::validation, "residual_class: multiplicity must be positive");
  if (d.alpha < 0 || d.beta < 0)
    fail(errc::validation, "residual_class: bidegree must be nonnegative");
  long long c2om;
  if (d.c2_omega)
    c2om = *d.c2_omega;
  else if (d.c1_omega_sq)
    c2om = 12 * d.chi - *d.c1_omega_sq;  // Noether
  else
    fail(errc::validation, "residual_class: cotangent Chern data required for the surface part");
  long long ab = d.alpha + d.beta;
  // degrees of the normal-bundle classes against the Schubert basis
  long long t_c1n = 3 * ab + 2 * d.pi - 2;
  long long c1n_sq_minus_c2n = 5 * ab + 8 * (d.pi - 1) + c2om;
  long long m = d.m, n = d.n;
  ResidualClass out;
  out.point_coeff =
      -m * m * m * c1n_sq_minus_c2n + m * m * n * t_c1n - m * (choose2(n + 1) * ab - n * d.beta);
  out.tu_coeff = 2 * choose3(n + 1) - n * m * m * ab + m * m * m * t_c1n;
  return out;
}

ResidualClass residual_smooth(long long n, long long alpha, long long beta, long long pi,
                              long long chi) {
  if (n < 1) fail(errc::validation, "residual_smooth: charge must be positive");
  if (alpha < 0 || beta < 0)
    fail(errc::validation, "residual_smooth: bidegree must be nonnegative");
  long long numerator = alpha * alpha + beta * beta - (n * n - 7 * n + 13) * beta -
                        (n * n - 5 * n + 13) * alpha + (2 * pi - 2) * (2 * n - 12) - 12 * chi;
  if (numerator % 2 != 0)
    fail(errc::validation, "residual_smooth: point coefficient is not an integer");
  ResidualClass out;
  out.point_coeff = numerator / 2;
  out.tu_coeff = 2 * choose3(n + 1) - (n - 3) * (alpha + beta) + 2 * pi - 2;
  return out;
}

bool congruence_identity(long long alpha, long long beta, long long pi, long long c1_omega_sq,
                         long long chi) {
  return alpha * alpha + beta * beta ==
         3 * (alpha + beta) + 4 * (2 * pi - 2) + 2 * c1_omega_sq - 12 * chi;
}

namespace {

// polynomials in two splitting roots a, b with integer coefficients
using Poly2 = std::map<std::array<int, 2>, long long>;

Poly2 p2_mul(const Poly2& x, const Poly2& y) {
  Poly2 r;
  for (const auto& [ex, cx] : x)
    for (const auto& [ey, cy] : y) {
      auto& slot = r[{ex[0] + ey[0], ex[1] + ey[1]}];
      slot += cx * cy;
      if (slot == 0) r.erase({ex[0] + ey[0], ex[1] + ey[1]});
    }
  return r;
}

Poly2 p2_add(Poly2 x, const Poly2& y) {
  for (const auto& [e, c] : y) {
    auto& slot = x[e];
    slot += c;
    if (slot == 0) x.erase(e);
  }
  return x;
}

Poly2 p2_scale(Poly2 x, long long s) {
  if (s == 0) return {};
  for (auto& [e, c] : x) c *= s;
  return x;
}

// rewrite a symmetric polynomial over the elementary basis e1 = a + b,
// e2 = ab; returns coefficients indexed by (e1 exponent, e2 exponent)
std::map<std::array<int, 2>, long long> symmetric_to_elementary(Poly2 p) {
  const Poly2 e1{{{1, 0}, 1}, {{0, 1}, 1}};
  const Poly2 e2{{{1, 1}, 1}};
  std::map<std::array<int, 2>, long long> out;
  while (!p.empty()) {
    // lex-largest monomial a^i b^j has i >= j by symmetry
    auto it = p.rbegin();
    auto [e, coeff] = *it;
    if (e[0] < e[1]) fail(errc::internal, "symmetric_to_elementary: input is not symmetric");
    Poly2 target{{{0, 0}, 1}};
    for (int q = 0; q < e[0] - e[1]; ++q) target = p2_mul(target, e1);
    for (int q = 0; q < e[1]; ++q) target = p2_mul(target, e2);
    out[{e[0] - e[1], e[1]}] += coeff;
    p = p2_add(std::move(p), p2_scale(std::move(target), -coeff));
  }
  return out;
}

}  // namespace

long long sym2_omega_check() {
  // splitting roots of the rank-2 sheaf; its symmetric square has Chern
  // roots 2a, a + b, 2b
  const Poly2 ra{{{1, 0}, 2}};
  const Poly2 rb{{{1, 0}, 1}, {{0, 1}, 1}};
  const Poly2 rc{{{0, 1}, 2}};
  Poly2 c1 = p2_add(p2_add(ra, rb), rc);
  Poly2 c2 = p2_add(p2_add(p2_mul(ra, rb), p2_mul(ra, rc)), p2_mul(rb, rc));
  auto e_c1 = symmetric_to_elementary(c1);
  auto e_c2 = symmetric_to_elementary(c2);
  // on the plane with c1 = h and c2 = h^2 the monomial e1^x e2^y becomes
  // h^(x + 2y); collect the h^2 coefficient of c2 - h.c1 + h^2
  long long h2 = 1;  // the trailing + h^2
  for (const auto& [e, c] : e_c2)
    if (e[0] + 2 * e[1] == 2) h2 += c;
  for (const auto& [e, c] : e_c1)
    if (e[0] + 2 * e[1] == 1) h2 -= c;
  return h2;
}

}  // namespace ilab
