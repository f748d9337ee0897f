// Nets of quadrics attached to an instanton monad through a symplectic
// structure, theta-characteristic section spaces on the discriminant curve,
// the skew obstruction system beta, and singularity diagnostics for the
// two-dimensional section spaces cut out by beta.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ilab/field.hpp"
#include "ilab/geometry.hpp"
#include "ilab/matrix.hpp"
#include "ilab/monad.hpp"
#include "ilab/poly.hpp"
#include "ilab/rng.hpp"

namespace ilab {

// Family of symmetric n x n matrices indexed by the six coordinate planes
// of 4-space, in the same pair order as Plucker coordinates:
// (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).  eval(x, y) is alternating in (x, y),
// so it factors through the wedge of the two points.
struct Hypernet {
  Fq k;
  int n = 0;
  std::array<Mat<Fq>, 6> q;

  // Q(x ^ y) as a symmetric n x n matrix.
  Mat<Fq> eval(const Vec<Fq>& x, const Vec<Fq>& y) const;
};

// q_ij = A_i^t J A_j.  Symmetry of each q_ij and vanishing of A_i^t J A_i
// are demanded; failure means J is not a valid symplectic structure for A.
Hypernet hypernet_from_monad(const InstantonMonad& m, const SymplecticStructure& j);

// Net of quadrics on an n-dimensional space: three symmetric matrices,
// the restriction of a hypernet to the pencil star of a base point.
// split records which plane of coordinates parametrises the star, so that
// y_point_of_line over the same splitting indexes the same matrix pencil.
struct NetOfQuadrics {
  Fq k;
  int n = 0;
  std::array<Mat<Fq>, 3> m;
  PointSplitting split;

  // y0 m0 + y1 m1 + y2 m2 for a point y of the plane.
  Mat<Fq> at(const Vec<Fq>& y) const;
};

// Checked constructor from explicit symmetric matrices (external input path).
NetOfQuadrics net_from_matrices(const Fq& k, int n, const std::array<Mat<Fq>, 3>& m);

// Seeded random net: three independent random symmetric matrices.
NetOfQuadrics random_net(const Fq& k, int n, Rng& rng);

// Restriction m_k = Q(base ^ w_k) where w_0, w_1, w_2 is the complement
// basis of the splitting at base.  All three matrices zero -> error.
NetOfQuadrics net_at_point(const Hypernet& h, const Vec<Fq>& base);

// Coordinate change of the underlying n-space: m_k -> p^t m_k p.
NetOfQuadrics transform_net(const NetOfQuadrics& net, const Mat<Fq>& p);

// Corank of the net matrix at one point of the plane.
int discriminant_corank(const NetOfQuadrics& net, const Vec<Fq>& y);

// Determinant of y0 m0 + y1 m1 + y2 m2 as a degree-n form in y.
// degenerate flags the identically zero determinant.
struct DiscriminantCurve {
  GradedPoly<Fq> det;
  bool degenerate = false;
};
DiscriminantCurve discriminant_curve(const NetOfQuadrics& net);

enum class StabilityVerdict { stable, strictly_semistable, unstable };

// Worst isotropic subspace found by the exhaustive search: basis rows,
// its perpendicular dimension, and the score dim L + dim Lperp compared
// against n (score >= n breaks stability, score > n breaks semistability).
struct StabilityWitness {
  Mat<Fq> basis;
  int dim = 0;
  int perp_dim = 0;
  int score = 0;
};

struct StabilityReport {
  StabilityVerdict verdict = StabilityVerdict::stable;
  std::optional<StabilityWitness> witness;  // engaged iff an isotropic subspace exists
  long long subspaces_checked = 0;
};

// Exhaustive search over all 1- and 2-dimensional subspaces defined over
// the base field.  Errors if the subspace count exceeds an internal cap.
StabilityReport net_stability(const NetOfQuadrics& net, int jobs = 1);

const char* to_string(StabilityVerdict v);

// Section spaces of the theta characteristic on the discriminant curve,
// presented as explicit cokernels.
//   t2     sections of theta(2): coker(H -> H^v(x)V),       dim 2n
//   t3     sections of theta(3): coker(H(x)V -> H^v(x)S2V), dim 3n
//   sigma  coker of b : H(x)t2 -> H^v(x)t3,  b(h(x)s) = sum_k m_k h (x) [y_k s]
// For n >= 2, dim sigma = C(n-2,2) + C(n+3,2) - 3, splitting off the
// C(n-2,2)-dimensional piece where the obstruction system takes values.
struct ThetaSpaces {
  Fq k;
  int n = 0;
  Quotient<Fq> t2;      // ambient 3n, flat index kk*n + i
  Quotient<Fq> t3;      // ambient 6n, flat index q*n + i, q = mono_index in S2V
  Quotient<Fq> sigma;   // ambient n*dim t3, flat index t*n + i
  Mat<Fq> b_raw;        // the unreduced matrix of b, columns indexed by (j, a)
  int h0_oc1 = 0;       // sections of O_C(1); equals dim ker b
  int dim_q4 = 0;       // sections of theta^2(4), = C(n+3,2) - 3 for n >= 2

  // Coset representative in H^v(x)V of a section given in t2 coordinates.
  Vec<Fq> section_rep(const Vec<Fq>& s) const;
  // Value of the representative at a plane point: an H^v vector; the stalk
  // value is its class modulo the column span of the net matrix at y.
  Vec<Fq> section_value(const Vec<Fq>& s, const Vec<Fq>& y) const;
};

ThetaSpaces theta_section_spaces(const NetOfQuadrics& net);

// The skew forms a_1..a_r on the 2n-dimensional t2 space, r = C(n-2,2),
// obtained from the class of gamma(s, s') = s.s' - s'.s in the distinguished
// r-dimensional subspace u of sigma.  The stacked map wedge^2 t2 -> k^r is
// demanded surjective.
struct BetaSystem {
  ThetaSpaces theta;
  NetOfQuadrics net;
  std::vector<Mat<Fq>> forms;  // r skew 2n x 2n matrices over the t2 basis
  Mat<Fq> u_basis;             // dim sigma x r, basis of the value space
  int r = 0;

  // beta(s ^ s') as an r-vector of u coordinates.
  Vec<Fq> pair_value(const Vec<Fq>& s, const Vec<Fq>& sp) const;
};

BetaSystem beta_system(const NetOfQuadrics& net);

// beta(s ^ s') computed through the quotient machinery, cross-checked
// against direct membership of gamma(s, s') in the column span of b_raw.
// The two vanishing verdicts must agree; disagreement is an internal error.
Vec<Fq> splitting_obstruction(const BetaSystem& bs, const Vec<Fq>& s, const Vec<Fq>& sp);
Vec<Fq> splitting_obstruction(const NetOfQuadrics& net, const Vec<Fq>& s, const Vec<Fq>& sp);

// Two-dimensional image of the monad fiber at base inside the theta(2)
// section space: column a of the result holds t2 coordinates of the section
// h |-> w_a^t J A(w_k) h attached to a fiber basis vector w_a.
// Demands: no multi-jumping line through base; beta vanishes on the pair;
// the two sections generate every stalk of theta(2) over rational points
// of the discriminant curve.
struct DistinguishedPair {
  Mat<Fq> sections;       // 2n x 2, t2 coordinates
  BetaSystem beta;        // the system the pair was certified against
  NetOfQuadrics net;
};
DistinguishedPair distinguished_pair(const InstantonMonad& m, const SymplecticStructure& j,
                                     const Vec<Fq>& base);

// Zariski tangent dimension of { K in G(2, 2n) : beta|wedge^2 K = 0 } at a
// point K with beta(K) = 0, together with the common kernel of the forms.
// moduli accounting: curves + frame + tangent compared against 8n - 3.
struct SingularityReport {
  int tangent_dim = 0;
  int common_kernel_dim = 0;
  int curve_family_dim = 0;     // n(n+3)/2
  int frame_dim = 4;            // basis freedom of the section pair
  int generic_tangent_dim = 0;  // 4n - 4 - C(n-2,2)
  int moduli_total = 0;         // 8n - 3
  bool bookkeeping_exact = false;  // curve_family + frame + tangent == moduli_total
};

SingularityReport singularity_diagnostics(const BetaSystem& bs, const Mat<Fq>& kplane);

// Seeded search for a pair (s, s') with beta(s ^ s') = 0 whose tangent
// dimension matches the generic value; nullopt if no seed in range works.
std::optional<Mat<Fq>> generic_isotropic_pair(const BetaSystem& bs, unsigned long long seed,
                                              int tries = 64);

}  // namespace ilab
