// Lines in P^3 over a prime field in Plucker coordinates
// (p01, p02, p03, p12, p13, p23), stored projectively normalized so the
// first nonzero coordinate is 1. Incidence, joins, meets, transversals,
// reguli, secancy counts and the projection-from-a-point bookkeeping used
// by the jumping-line modules all live here.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ilab/matrix.hpp"

namespace ilab {

using Fq = PrimeField;
using FqV = Fq::value_type;

int first_nonzero(const Fq& k, const Vec<Fq>& v);
// scale so the first nonzero coordinate is 1; error on the zero vector
Vec<Fq> proj_normalize(const Fq& k, Vec<Fq> v);
bool proj_eq(const Fq& k, const Vec<Fq>& a, const Vec<Fq>& b);

struct PluckerLine {
  Vec<Fq> p;  // 6 normalized coordinates
  bool operator==(const PluckerLine& o) const { return p == o.p; }
  bool operator<(const PluckerLine& o) const { return p < o.p; }  // lex on residues
};

// p01 p23 - p02 p13 + p03 p12; zero iff p lies on the line quadric
FqV plucker_relation(const Fq& k, const Vec<Fq>& p);
// validated constructor from raw coordinates: nonzero, Plucker relation
PluckerLine plucker_from_coords(const Fq& k, const Vec<Fq>& raw);
PluckerLine line_through(const Fq& k, const Vec<Fq>& a, const Vec<Fq>& b);
// two spanning points recovered from the rank-2 antisymmetric matrix
std::pair<Vec<Fq>, Vec<Fq>> spanning_points(const Fq& k, const PluckerLine& l);

// polarized Plucker pairing; zero iff the lines meet
FqV meet_pairing(const Fq& k, const PluckerLine& a, const PluckerLine& b);
bool lines_meet(const Fq& k, const PluckerLine& a, const PluckerLine& b);
bool line_contains_point(const Fq& k, const PluckerLine& l, const Vec<Fq>& x);

// covector of the plane spanned by l and x; error if x lies on l
Vec<Fq> plane_through(const Fq& k, const PluckerLine& l, const Vec<Fq>& x);
// intersection line of two non-proportional planes
PluckerLine line_from_planes(const Fq& k, const Vec<Fq>& u, const Vec<Fq>& w);

// unique line through n meeting both skew lines; nullopt when l1 and l2 are
// not skew; error when n is incident to l1 or l2
std::optional<PluckerLine> transversal_through_point(const Fq& k, const Vec<Fq>& n,
                                                     const PluckerLine& l1,
                                                     const PluckerLine& l2);

struct Regulus {
  // the unique quadric through three pairwise skew lines, as a symmetric
  // quadratic form coefficient vector on the basis
  // x0^2, x0x1, x0x2, x0x3, x1^2, x1x2, x1x3, x2^2, x2x3, x3^2
  Vec<Fq> quadric;
  // parametrization data: ruling through the point s*a3 + t*b3 of l3
  Vec<Fq> a3, b3;
  PluckerLine l1, l2;
};

Regulus regulus_through_three(const Fq& k, const PluckerLine& l1, const PluckerLine& l2,
                              const PluckerLine& l3);
PluckerLine ruling_at(const Fq& k, const Regulus& reg, FqV s, FqV t);
FqV quadric_eval(const Fq& k, const Vec<Fq>& quadric, const Vec<Fq>& x);

struct Transversals {
  bool infinite = false;          // the incidence form vanishes identically
  bool double_root = false;       // tangent position: one root of multiplicity two
  std::vector<PluckerLine> lines; // the transversals found over F_p
};

Transversals transversals_to_four(const Fq& k, const PluckerLine& l1, const PluckerLine& l2,
                                  const PluckerLine& l3, const PluckerLine& l4);

// how many members of the pairwise-skew configuration z the line l meets;
// error if l is a member of z
struct Secancy {
  int count = 0;
  std::vector<int> met;
};
Secancy secancy_profile(const Fq& k, const PluckerLine& l, const std::vector<PluckerLine>& z);

void require_pairwise_skew(const Fq& k, const std::vector<PluckerLine>& z, const char* what);

// Projection from a base point N: the plane Y of lines through N carries
// coordinates via the splitting of k^4 into <N> and the three standard
// coordinates away from the pivot of N (the first nonzero position of the
// normalized N), taken in increasing order.
struct PointSplitting {
  Vec<Fq> n;               // normalized base point
  int pivot = 0;           // index of the leading 1 of n
  std::vector<int> comp;   // the three complementary coordinate positions
};
PointSplitting splitting_at(const Fq& k, const Vec<Fq>& n);
// lift of a Y-point to the complementary coordinate subspace of k^4
Vec<Fq> lift_y(const Fq& k, const PointSplitting& s, const Vec<Fq>& y);
// Y-coordinates of the projection of a point x != N from N
Vec<Fq> project_from(const Fq& k, const PointSplitting& s, const Vec<Fq>& x);
// Y-point of a line through N
Vec<Fq> y_point_of_line(const Fq& k, const PointSplitting& s, const PluckerLine& l);
// line through N with the given Y-point
PluckerLine line_at_y(const Fq& k, const PointSplitting& s, const Vec<Fq>& y);

struct NgonVertex {
  int i = 0, j = 0;
  Vec<Fq> y;  // normalized Y-coordinates of the projected transversal
};

// vertices of the complete (n+1)-gon cut by the pairwise transversals of a
// skew configuration, projected from n to Y
std::vector<NgonVertex> ngon_vertices(const Fq& k, const std::vector<PluckerLine>& z,
                                      const Vec<Fq>& n);

// deterministic enumerations, smallest representatives first
std::vector<Vec<Fq>> enumerate_proj_points(const Fq& k, int dim);
std::vector<PluckerLine> enumerate_lines(const Fq& k);
std::int64_t count_lines(std::int64_t p);

}  // namespace ilab
