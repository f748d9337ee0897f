// Rank-2 bundles on P^3 presented by monads O(-1)^n -> O^(2n+2) -> O(1)^n
// with linear maps A, B stored as four constant coefficient matrices each.
// Covers validation, the special pencil fixture, restriction to lines,
// jumping order bookkeeping, exhaustive multi-jumping scans over F_p and
// the symplectic structure on the middle term.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ilab/geometry.hpp"
#include "ilab/matrix.hpp"

namespace ilab {

template <class F>
struct MonadT {
  F k;
  int n = 0;
  std::array<Mat<F>, 4> A;  // each (2n+2) x n; A(x) = sum x_i A[i]
  std::array<Mat<F>, 4> B;  // each n x (2n+2)
};

using InstantonMonad = MonadT<PrimeField>;
using RationalMonad = MonadT<RationalField>;

// A(x) and B(x) at a point
template <class F>
Mat<F> eval_A(const MonadT<F>& m, const Vec<F>& x);
template <class F>
Mat<F> eval_B(const MonadT<F>& m, const Vec<F>& x);

// checks shapes, B(x)A(x) = 0 coefficientwise, and full rank of A(x), B(x)
// at every point of P^3(F_scan_p); returns the monad on success. For
// rational input the rank conditions are checked on the reduction mod
// scan_p; for prime-field input scan_p must equal the modulus.
template <class F>
MonadT<F> validate_monad(const F& k, const std::array<Mat<F>, 4>& A,
                         const std::array<Mat<F>, 4>& B, std::int64_t scan_p);
template <class F>
MonadT<F> validate_monad(const MonadT<F>& m, std::int64_t scan_p);

// entrywise reduction mod p; error when a denominator is divisible by p
InstantonMonad reduce_monad(const RationalMonad& m, std::int64_t p);

// B = [C(x0,x1) | C(x2,x3)], A = [D(x2,x3); -D(x0,x1)] with C(u,v) the
// n x (n+1) pencil carrying u on the diagonal and v on the superdiagonal
// and D(u,v) the (n+1) x n pencil carrying v on the diagonal and u on the
// subdiagonal; B(x)A(x) = 0 because C(a,b)D(c,d) is tridiagonal
// (ac, ad+bc, bd), symmetric under (a,b) <-> (c,d)
InstantonMonad special_thooft_monad(const Fq& k, int n);
RationalMonad special_thooft_monad_q(int n);

// zero lines of the distinguished degree-(1,1) section of the fixture: the
// rulings {x0 = t x1, x2 = t x3} with t^(n+1) = (-1)^(n-1), as far as t is
// rational; for n = 5 over F_7 all six values of t qualify
std::vector<PluckerLine> thooft_section_lines(const Fq& k, int n);

struct SymplecticStructure {
  Mat<Fq> J;  // antisymmetric invertible, A(x)^t J A(x) = 0
};

struct SymplecticSearch {
  std::optional<SymplecticStructure> J;
  int solution_dim = 0;  // dimension of the antisymmetric solution space
};

// solves A(x)^t J A(x) = 0 (all 10 quadratic coefficient matrices) over
// antisymmetric J and hunts for an invertible solution among the basis and
// at most 100 seeded pseudo-random combinations
SymplecticSearch find_symplectic(const InstantonMonad& m);

struct LineRestriction {
  PluckerLine line;
  Vec<Fq> a, b;                  // parametrization s*a + t*b
  std::array<Mat<Fq>, 2> A_L;    // A(a), A(b)
  std::array<Mat<Fq>, 2> B_L;    // B(a), B(b)
};

LineRestriction restrict_to_line(const InstantonMonad& m, const PluckerLine& l);

// h^0 of the rank-2 quotient on the line, twisted by j >= 0: the kernel
// dimension of the n(j+2) x (2n+2)(j+1) section matrix of B on the line,
// minus the n*j dimensions contributed by the image of A
int restricted_h0(const InstantonMonad& m, const PluckerLine& l, int j);

// h^0 of the restriction to the plane with the given covector
int restricted_h0_plane(const InstantonMonad& m, const Vec<Fq>& plane);

struct JumpingOrder {
  bool decided = false;
  int order = 0;  // valid when decided; otherwise the order is 0 or 1
};

// order k means the line splitting is O(k) + O(-k). h0 >= 3 forces
// order = h0 - 1. h0 = 2 leaves 0 vs 1 open; with a symplectic structure
// the order is read off as the corank of the quadric net at any point of
// the line (defined in net.cpp alongside the net machinery)
JumpingOrder jumping_order(const InstantonMonad& m, const PluckerLine& l,
                           const SymplecticStructure* J = nullptr);

struct ScanHit {
  PluckerLine line;
  int order = 0;  // >= 2
};

// every F_p-rational line with h0 of the restriction >= 3, with its order,
// sorted by Plucker coordinates; partitioned across jobs deterministically
std::vector<ScanHit> multijump_scan(const InstantonMonad& m, std::int64_t p, int jobs = 1);
std::vector<ScanHit> multijump_scan(const RationalMonad& m, std::int64_t p, int jobs = 1);

// basis of ker B(N) adapted to the fiber: the n columns of A(N) followed by
// two deterministic completion vectors whose classes span ker B(N) / im A(N)
Mat<Fq> fiber_basis(const InstantonMonad& m, const Vec<Fq>& N);

// coordinates of w in the 2-dimensional fiber ker B(N) / im A(N); the
// completion basis is chosen deterministically from standard vectors
Vec<Fq> fiber_class(const InstantonMonad& m, const Vec<Fq>& N, const Vec<Fq>& w);

// h^0(E(j)), and with `through` set, h^0 of the subsheaf of sections whose
// fiber class at the point vanishes
int global_h0(const InstantonMonad& m, int j, const Vec<Fq>* through = nullptr);

}  // namespace ilab
