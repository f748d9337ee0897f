// Integer Schubert calculus on the Grassmannian of lines in 3-space and
// the blow-up residual-class evaluation for a surface of multi-jumping
// lines, with the smooth-congruence specialization and its cross-checks.
#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace ilab {

// Class in the Chow ring of the line Grassmannian on the basis
// {1, t, t2, u, tu, pt}: t is the hyperplane section, u the lines in a
// fixed plane, pt = t^2 u the point class; t^3 = 2tu and u^2 = t^2 u.
struct ChowClassG {
  enum Index { kOne = 0, kT = 1, kT2 = 2, kU = 3, kTU = 4, kPt = 5 };
  std::array<long long, 6> c{};

  ChowClassG add(const ChowClassG& o) const;
  ChowClassG sub(const ChowClassG& o) const;
  ChowClassG scaled(long long s) const;
  bool eq(const ChowClassG& o) const { return c == o.c; }
  bool is_zero() const;
};

ChowClassG chow_basis(ChowClassG::Index i);

// bilinear product reduced to the basis via t^3 = 2tu, u^2 = t^2 u
ChowClassG chow_mul(const ChowClassG& a, const ChowClassG& b);

// codimensions of the six basis classes: 0, 1, 2, 2, 3, 4
int chow_codim(ChowClassG::Index i);

// Chern classes (c1, c2, c3) of the rank-3 bundle F governing the
// multi-jumping locus of charge n: (nt, C(n+1,2)t^2 - nu, 2C(n+1,3)tu)
std::array<ChowClassG, 3> chern_F(int n);

// Numeric data of a congruence of multi-jumping lines: charge n,
// multiplicity m of the surface along its reduction, bidegree
// (alpha, beta), sectional genus pi, chi(O_S), and optionally the
// cotangent Chern numbers of the reduced surface.
struct CongruenceData {
  long long n = 0;
  long long m = 1;
  long long alpha = 0;
  long long beta = 0;
  long long pi = 0;
  long long chi = 0;
  std::optional<long long> c2_omega;
  std::optional<long long> c1_omega_sq;
};

// Residual curve class split into the part supported on the surface
// (degree against the point class of the reduction) and the ambient
// part (coefficient of tu).
struct ResidualClass {
  long long point_coeff = 0;
  long long tu_coeff = 0;
};

// General multiplicity-m evaluation.  The exceptional powers reduce by
// zeta^2 = c1(N) zeta - c2(N), with degrees pinned by
// t.c1N = 3(alpha+beta) + 2pi - 2 and
// c1N^2 - c2N = 5(alpha+beta) + 8(pi-1) + c2(Omega).
// c2(Omega) falls back to 12 chi - c1(Omega)^2 when absent; missing both
// is an error.
ResidualClass residual_class(const CongruenceData& d);

// Smooth-congruence specialization (m = 1) in closed form; the halved
// point coefficient is checked for integrality.
ResidualClass residual_smooth(long long n, long long alpha, long long beta, long long pi,
                              long long chi);

// alpha^2 + beta^2 = 3(alpha+beta) + 4(2pi-2) + 2 c1(Omega)^2 - 12 chi,
// satisfied by every smooth congruence.
bool congruence_identity(long long alpha, long long beta, long long pi, long long c1_omega_sq,
                         long long chi);

// c2(Sym2 W) - h.c1(Sym2 W) + h^2 for a rank-2 sheaf W on the plane with
// c1 = h, c2 = h^2, expanded by the splitting principle; returns the
// coefficient of h^2 (must be 4).
long long sym2_omega_check();

}  // namespace ilab
