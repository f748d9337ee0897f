// Net-of-quadrics machinery: hypernets from a symplectic structure on a
// monad, restriction to the pencil star of a point, discriminant data,
// exhaustive stability, theta-characteristic section spaces, the skew
// obstruction system beta, and the distinguished section pair of a fiber.
#include "ilab/net.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "ilab/parallel.hpp"

namespace ilab {
namespace {

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

FqV dot(const Fq& k, const Vec<Fq>& u, const Vec<Fq>& v) {
  FqV acc = k.zero();
  for (size_t i = 0; i < u.size(); ++i) acc = k.add(acc, k.mul(u[i], v[i]));
  return acc;
}

FqV form_value(const Fq& k, const Mat<Fq>& a, const Vec<Fq>& u, const Vec<Fq>& v) {
  return dot(k, u, a.apply(v));
}

// mono_index of y_a y_b among the degree-2 monomials in three variables
int s2v_index(int a, int b) {
  std::vector<int> e(3, 0);
  ++e[a];
  ++e[b];
  return mono_index(e);
}

// index of e_i e_j among the degree-2 monomials in n variables, symmetric
std::vector<std::vector<int>> s2h_table(int n) {
  auto mons = mono_list(n, 2);
  std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
  for (size_t m = 0; m < mons.size(); ++m) {
    int a = -1, b = -1;
    for (int i = 0; i < n; ++i) {
      if (mons[m][i] == 2) a = b = i;
      if (mons[m][i] == 1) (a < 0 ? a : b) = i;
    }
    t[a][b] = t[b][a] = static_cast<int>(m);
  }
  return t;
}

// t3 coordinates of y_kk * rep for a coset representative rep in H^v (x) V
Vec<Fq> times_y(const ThetaSpaces& th, const Vec<Fq>& rep, int kk) {
  const Fq& k = th.k;
  const int n = th.n;
  Vec<Fq> prod(6 * n, k.zero());
  for (int kp = 0; kp < 3; ++kp) {
    int q = s2v_index(kk, kp);
    for (int i = 0; i < n; ++i) prod[q * n + i] = k.add(prod[q * n + i], rep[kp * n + i]);
  }
  return th.t3.project(prod);
}

// gamma(s, s') = rep(s).s' - rep(s').s in H^v (x) t3 coordinates, the raw
// antisymmetric product whose sigma class is the obstruction value
Vec<Fq> gamma_vec(const ThetaSpaces& th, const Vec<Fq>& s, const Vec<Fq>& sp) {
  const Fq& k = th.k;
  const int n = th.n, d3 = th.t3.dim();
  Vec<Fq> rs = th.t2.lift(s), rsp = th.t2.lift(sp);
  Vec<Fq> out(static_cast<size_t>(d3) * n, k.zero());
  for (int kk = 0; kk < 3; ++kk) {
    Vec<Fq> cs = times_y(th, rs, kk), csp = times_y(th, rsp, kk);
    for (int i = 0; i < n; ++i) {
      FqV c1 = rs[kk * n + i], c2 = rsp[kk * n + i];
      if (k.is_zero(c1) && k.is_zero(c2)) continue;
      for (int t = 0; t < d3; ++t)
        out[t * n + i] =
            k.add(out[t * n + i], k.sub(k.mul(c1, csp[t]), k.mul(c2, cs[t])));
    }
  }
  return out;
}

}  // namespace

Mat<Fq> Hypernet::eval(const Vec<Fq>& x, const Vec<Fq>& y) const {
  if (x.size() != 4 || y.size() != 4)
    fail(errc::validation, "Hypernet::eval: points need four coordinates");
  Mat<Fq> out(k, n, n);
  for (int t = 0; t < 6; ++t) {
    int i = kPairs[t][0], j = kPairs[t][1];
    FqV c = k.sub(k.mul(x[i], y[j]), k.mul(x[j], y[i]));
    if (!k.is_zero(c)) out = out.add(q[t].scaled(c));
  }
  return out;
}

Hypernet hypernet_from_monad(const InstantonMonad& m, const SymplecticStructure& j) {
  const Fq& k = m.k;
  const int w = 2 * m.n + 2;
  check_same_field(k, j.J.field(), "hypernet_from_monad");
  if (j.J.rows() != w || j.J.cols() != w)
    fail(errc::validation, "hypernet_from_monad: J size does not match the monad width");
  if (!j.J.transpose().eq(j.J.scaled(k.neg(k.one()))))
    fail(errc::validation, "hypernet_from_monad: J is not antisymmetric");
  Hypernet h{k, m.n, {}};
  for (int i = 0; i < 4; ++i)
    if (!m.A[i].transpose().mul(j.J).mul(m.A[i]).is_zero())
      fail(errc::validation, "hypernet_from_monad: J does not annihilate A symmetrically");
  for (int t = 0; t < 6; ++t) {
    Mat<Fq> qm = m.A[kPairs[t][0]].transpose().mul(j.J).mul(m.A[kPairs[t][1]]);
    if (!qm.transpose().eq(qm))
      fail(errc::validation, "hypernet_from_monad: J does not annihilate A symmetrically");
    h.q[t] = qm;
  }
  return h;
}

Mat<Fq> NetOfQuadrics::at(const Vec<Fq>& y) const {
  if (y.size() != 3)
    fail(errc::validation, "NetOfQuadrics::at: plane point needs three coordinates");
  Mat<Fq> out(k, n, n);
  for (int t = 0; t < 3; ++t)
    if (!k.is_zero(y[t])) out = out.add(m[t].scaled(y[t]));
  return out;
}

NetOfQuadrics net_from_matrices(const Fq& k, int n, const std::array<Mat<Fq>, 3>& m) {
  if (n < 1) fail(errc::validation, "net_from_matrices: dimension must be at least 1");
  bool any = false;
  for (int t = 0; t < 3; ++t) {
    check_same_field(k, m[t].field(), "net_from_matrices");
    if (m[t].rows() != n || m[t].cols() != n)
      fail(errc::validation, "net_from_matrices: matrix " + std::to_string(t + 1) +
                                 " is not " + std::to_string(n) + " x " + std::to_string(n));
    if (!m[t].transpose().eq(m[t]))
      fail(errc::validation,
           "net_from_matrices: matrix " + std::to_string(t + 1) + " is not symmetric");
    if (!m[t].is_zero()) any = true;
  }
  if (!any) fail(errc::validation, "net_from_matrices: all three quadrics vanish");
  return {k, n, m, {}};
}

NetOfQuadrics random_net(const Fq& k, int n, Rng& rng) {
  if (n < 1) fail(errc::validation, "random_net: dimension must be at least 1");
  for (;;) {
    std::array<Mat<Fq>, 3> ms;
    bool any = false;
    for (int t = 0; t < 3; ++t) {
      ms[t] = Mat<Fq>(k, n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          FqV v = rng.element(k);
          ms[t].at(i, j) = v;
          ms[t].at(j, i) = v;
        }
      if (!ms[t].is_zero()) any = true;
    }
    if (any) return {k, n, ms, {}};
  }
}

NetOfQuadrics net_at_point(const Hypernet& h, const Vec<Fq>& base) {
  const Fq& k = h.k;
  PointSplitting sp = splitting_at(k, base);
  NetOfQuadrics net{k, h.n, {}, sp};
  bool any = false;
  for (int t = 0; t < 3; ++t) {
    Vec<Fq> w(4, k.zero());
    w[sp.comp[t]] = k.one();
    net.m[t] = h.eval(sp.n, w);
    if (!net.m[t].is_zero()) any = true;
  }
  if (!any) fail(errc::validation, "net_at_point: net of quadrics degenerates at the point");
  return net;
}

NetOfQuadrics transform_net(const NetOfQuadrics& net, const Mat<Fq>& p) {
  check_same_field(net.k, p.field(), "transform_net");
  if (p.rows() != net.n || p.cols() != net.n || rank_of(p) != net.n)
    fail(errc::validation, "transform_net: change of basis must be invertible of matching size");
  NetOfQuadrics out = net;
  for (int t = 0; t < 3; ++t) out.m[t] = p.transpose().mul(net.m[t]).mul(p);
  return out;
}

int discriminant_corank(const NetOfQuadrics& net, const Vec<Fq>& y) {
  const Fq& k = net.k;
  bool zero = true;
  for (const auto& c : y)
    if (!k.is_zero(c)) zero = false;
  if (zero) fail(errc::validation, "discriminant_corank: zero plane point");
  return net.n - rank_of(net.at(y));
}

DiscriminantCurve discriminant_curve(const NetOfQuadrics& net) {
  const Fq& k = net.k;
  std::vector<std::vector<GradedPoly<Fq>>> e(net.n, std::vector<GradedPoly<Fq>>(net.n));
  for (int i = 0; i < net.n; ++i)
    for (int j = 0; j < net.n; ++j)
      e[i][j] = GradedPoly<Fq>::linear(
          k, {net.m[0].at(i, j), net.m[1].at(i, j), net.m[2].at(i, j)});
  DiscriminantCurve out{poly_det(e), false};
  out.degenerate = out.det.is_zero();
  return out;
}

const char* to_string(StabilityVerdict v) {
  switch (v) {
    case StabilityVerdict::stable: return "stable";
    case StabilityVerdict::strictly_semistable: return "strictly_semistable";
    case StabilityVerdict::unstable: return "unstable";
  }
  return "unknown";
}

namespace {

// basis rows span L; perp is the common kernel of the polarized forms on L
int perp_dim(const NetOfQuadrics& net, const Mat<Fq>& basis) {
  const Fq& k = net.k;
  Mat<Fq> cond(k, 3 * basis.rows(), net.n);
  for (int r = 0; r < basis.rows(); ++r) {
    Vec<Fq> u = basis.row(r);
    for (int t = 0; t < 3; ++t) {
      Vec<Fq> mu = net.m[t].apply(u);
      for (int c = 0; c < net.n; ++c) cond.at(3 * r + t, c) = mu[c];
    }
  }
  return net.n - rank_of(cond);
}

bool is_isotropic(const NetOfQuadrics& net, const Mat<Fq>& basis) {
  const Fq& k = net.k;
  for (int t = 0; t < 3; ++t)
    for (int r = 0; r < basis.rows(); ++r) {
      Vec<Fq> mu = net.m[t].apply(basis.row(r));
      for (int s = r; s < basis.rows(); ++s)
        if (!k.is_zero(dot(k, basis.row(s), mu))) return false;
    }
  return true;
}

// reduced row echelon basis of the plane with pivots c0 < c1; free entries
// are the little-endian base-p digits of code, row 0 first
Mat<Fq> decode_plane(const Fq& k, int n, int c0, int c1, long long code) {
  Mat<Fq> b(k, 2, n);
  b.at(0, c0) = k.one();
  b.at(1, c1) = k.one();
  for (int c = c0 + 1; c < n; ++c) {
    if (c == c1) continue;
    b.at(0, c) = code % k.p;
    code /= k.p;
  }
  for (int c = c1 + 1; c < n; ++c) {
    b.at(1, c) = code % k.p;
    code /= k.p;
  }
  return b;
}

}  // namespace

StabilityReport net_stability(const NetOfQuadrics& net, int jobs) {
  const Fq& k = net.k;
  const int n = net.n;
  const std::int64_t p = k.p;
  constexpr long long kCap = 2'000'000;

  long double points_ld = 0, planes_ld = 0;
  {
    long double pw = 1;
    for (int i = 0; i < n; ++i) {
      points_ld += pw;
      pw *= static_cast<long double>(p);
    }
  }
  for (int c0 = 0; c0 < n; ++c0)
    for (int c1 = c0 + 1; c1 < n; ++c1) {
      long double b = 1;
      for (int e = 0; e < (n - c0 - 2) + (n - 1 - c1); ++e) b *= static_cast<long double>(p);
      planes_ld += b;
    }
  if (points_ld + planes_ld > static_cast<long double>(kCap))
    fail(errc::validation, "net_stability: exhaustive search needs more than " +
                               std::to_string(kCap) + " subspaces over F_" + std::to_string(p) +
                               "; rerun with a smaller prime");

  struct Block {
    int c0, c1;
    long long offset, size;
  };
  std::vector<Block> blocks;
  long long planes_total = 0;
  for (int c0 = 0; c0 < n; ++c0)
    for (int c1 = c0 + 1; c1 < n; ++c1) {
      long long b = 1;
      for (int e = 0; e < (n - c0 - 2) + (n - 1 - c1); ++e) b *= p;
      blocks.push_back({c0, c1, planes_total, b});
      planes_total += b;
    }
  auto plane_at = [&](long long idx) {
    auto it = std::upper_bound(blocks.begin(), blocks.end(), idx,
                               [](long long v, const Block& b) { return v < b.offset; });
    const Block& bl = *(it - 1);
    return decode_plane(k, n, bl.c0, bl.c1, idx - bl.offset);
  };

  StabilityReport out;
  int best_score = -1, best_dim = 0, best_perp = 0;
  Mat<Fq> best_basis;

  auto pts = enumerate_proj_points(k, n - 1);
  for (const auto& x : pts) {
    Mat<Fq> b(k, 1, n);
    b.set_row(0, x);
    if (!is_isotropic(net, b)) continue;
    int pd = perp_dim(net, b);
    if (1 + pd > best_score) {
      best_score = 1 + pd;
      best_dim = 1;
      best_perp = pd;
      best_basis = b;
    }
  }
  out.subspaces_checked = static_cast<long long>(pts.size()) + planes_total;

  // score every plane, then take the first maximum: deterministic in jobs
  std::vector<int> score(static_cast<size_t>(planes_total), -1);
  parallel_chunks(resolve_jobs(jobs), static_cast<size_t>(planes_total),
                  [&](size_t lo, size_t hi) {
                    for (size_t idx = lo; idx < hi; ++idx) {
                      Mat<Fq> basis = plane_at(static_cast<long long>(idx));
                      if (!is_isotropic(net, basis)) continue;
                      score[idx] = 2 + perp_dim(net, basis);
                    }
                  });
  for (long long idx = 0; idx < planes_total; ++idx) {
    if (score[static_cast<size_t>(idx)] <= best_score) continue;
    best_score = score[static_cast<size_t>(idx)];
    best_dim = 2;
    best_perp = best_score - 2;
    best_basis = plane_at(idx);
  }

  if (best_score >= 0) {
    StabilityWitness w;
    w.basis = best_basis;
    w.dim = best_dim;
    w.perp_dim = best_perp;
    w.score = best_score;
    out.witness = w;
  }
  if (best_score > n)
    out.verdict = StabilityVerdict::unstable;
  else if (best_score == n)
    out.verdict = StabilityVerdict::strictly_semistable;
  else
    out.verdict = StabilityVerdict::stable;
  return out;
}

Vec<Fq> ThetaSpaces::section_rep(const Vec<Fq>& s) const { return t2.lift(s); }

Vec<Fq> ThetaSpaces::section_value(const Vec<Fq>& s, const Vec<Fq>& y) const {
  if (y.size() != 3)
    fail(errc::validation, "ThetaSpaces::section_value: plane point needs three coordinates");
  Vec<Fq> rep = t2.lift(s);
  Vec<Fq> out(n, k.zero());
  for (int kk = 0; kk < 3; ++kk)
    for (int i = 0; i < n; ++i) out[i] = k.add(out[i], k.mul(rep[kk * n + i], y[kk]));
  return out;
}

ThetaSpaces theta_section_spaces(const NetOfQuadrics& net) {
  const Fq& k = net.k;
  const int n = net.n;
  ThetaSpaces th;
  th.k = k;
  th.n = n;

  Mat<Fq> span2(k, 3 * n, n);
  for (int j = 0; j < n; ++j)
    for (int kk = 0; kk < 3; ++kk)
      for (int i = 0; i < n; ++i) span2.at(kk * n + i, j) = net.m[kk].at(i, j);
  th.t2 = Quotient<Fq>(k, span2);
  if (th.t2.subspace_dim() != n)
    fail(errc::validation, "theta_section_spaces: degenerate net (common kernel of the quadrics)");

  Mat<Fq> span3(k, 6 * n, 3 * n);
  for (int j = 0; j < n; ++j)
    for (int kk = 0; kk < 3; ++kk) {
      int col = kk * n + j;
      for (int l = 0; l < 3; ++l) {
        int q = s2v_index(l, kk);
        for (int i = 0; i < n; ++i)
          span3.at(q * n + i, col) = k.add(span3.at(q * n + i, col), net.m[l].at(i, j));
      }
    }
  th.t3 = Quotient<Fq>(k, span3);
  if (th.t3.subspace_dim() != 3 * n)
    fail(errc::validation, "theta_section_spaces: degenerate net (syzygy in degree two)");

  const int d2 = th.t2.dim(), d3 = th.t3.dim();
  Mat<Fq> braw(k, d3 * n, d2 * n);
  for (int a = 0; a < d2; ++a) {
    Vec<Fq> unit(d2, k.zero());
    unit[a] = k.one();
    Vec<Fq> rep = th.t2.lift(unit);
    std::array<Vec<Fq>, 3> cls;
    for (int kk = 0; kk < 3; ++kk) cls[kk] = times_y(th, rep, kk);
    for (int j = 0; j < n; ++j) {
      int col = a * n + j;
      for (int kk = 0; kk < 3; ++kk)
        for (int t = 0; t < d3; ++t) {
          if (k.is_zero(cls[kk][t])) continue;
          for (int i = 0; i < n; ++i)
            braw.at(t * n + i, col) =
                k.add(braw.at(t * n + i, col), k.mul(net.m[kk].at(i, j), cls[kk][t]));
        }
    }
  }
  th.b_raw = braw;
  th.sigma = Quotient<Fq>(k, braw);
  th.h0_oc1 = d2 * n - th.sigma.subspace_dim();
  th.dim_q4 = static_cast<int>(binom(n + 3, 2)) - 3;
  if (n >= 2) {
    const int r = (n >= 4) ? static_cast<int>(binom(n - 2, 2)) : 0;
    if (th.h0_oc1 != 3)
      fail(errc::validation, "theta_section_spaces: degenerate net (plane sections of the curve)");
    if (th.sigma.dim() != r + th.dim_q4)
      fail(errc::validation, "theta_section_spaces: degenerate net (sigma dimension mismatch)");
  }
  return th;
}

Vec<Fq> BetaSystem::pair_value(const Vec<Fq>& s, const Vec<Fq>& sp) const {
  const Fq& k = theta.k;
  Vec<Fq> proj = theta.sigma.project(gamma_vec(theta, s, sp));
  if (r == 0) {
    for (const auto& x : proj)
      if (!k.is_zero(x))
        fail(errc::internal, "BetaSystem::pair_value: value escapes the obstruction space");
    return {};
  }
  auto sol = solve(u_basis, proj);
  if (!sol.consistent)
    fail(errc::internal, "BetaSystem::pair_value: value escapes the obstruction space");
  return sol.particular;
}

BetaSystem beta_system(const NetOfQuadrics& net) {
  const Fq& k = net.k;
  const int n = net.n;
  BetaSystem bs;
  bs.theta = theta_section_spaces(net);
  bs.net = net;
  bs.r = (n >= 4) ? static_cast<int>(binom(n - 2, 2)) : 0;
  const ThetaSpaces& th = bs.theta;
  const int d2 = th.t2.dim(), d3 = th.t3.dim();
  const auto pr = s2h_table(n);
  const int np = mono_count(n, 2);

  // theta^2(4) as a quotient of S2 H^v (x) S2 V by the net relations
  Mat<Fq> en(k, np * 6, n * n * 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int kk = 0; kk < 3; ++kk) {
        int col = (kk * n + j) * n + i;
        for (int l = 0; l < 3; ++l) {
          int q = s2v_index(l, kk);
          for (int ip = 0; ip < n; ++ip) {
            int row = pr[i][ip] * 6 + q;
            en.at(row, col) = k.add(en.at(row, col), net.m[l].at(ip, j));
          }
        }
      }
  Quotient<Fq> q4(k, en);
  if (n >= 2 && q4.dim() != th.dim_q4)
    fail(errc::validation, "beta_system: degenerate net (theta^2(4) dimension mismatch)");

  // multiplication H^v (x) t3 -> theta^2(4); its kernel maps onto the
  // distinguished subspace of sigma where the obstruction takes values
  Mat<Fq> mm(k, q4.dim(), n * d3);
  for (int t = 0; t < d3; ++t) {
    Vec<Fq> unit(d3, k.zero());
    unit[t] = k.one();
    Vec<Fq> rep = th.t3.lift(unit);
    for (int i = 0; i < n; ++i) {
      Vec<Fq> elt(static_cast<size_t>(np) * 6, k.zero());
      for (int q = 0; q < 6; ++q)
        for (int ip = 0; ip < n; ++ip) {
          FqV c = rep[q * n + ip];
          if (k.is_zero(c)) continue;
          int row = pr[i][ip] * 6 + q;
          elt[row] = k.add(elt[row], c);
        }
      Vec<Fq> coords = q4.project(elt);
      for (int rr = 0; rr < q4.dim(); ++rr) mm.at(rr, t * n + i) = coords[rr];
    }
  }
  auto mred = reduce(mm);
  if (mred.rank != q4.dim())
    fail(errc::validation, "beta_system: multiplication to theta^2(4) has rank " +
                               std::to_string(mred.rank) + " of " + std::to_string(q4.dim()));

  Mat<Fq> uspan(k, th.sigma.dim(), mred.kernel.cols());
  for (int c = 0; c < mred.kernel.cols(); ++c) {
    Vec<Fq> pv = th.sigma.project(mred.kernel.col(c));
    for (int rr = 0; rr < th.sigma.dim(); ++rr) uspan.at(rr, c) = pv[rr];
  }
  auto ured = reduce(uspan.transpose());
  if (ured.rank != bs.r)
    fail(errc::validation, "beta_system: obstruction value space has dimension " +
                               std::to_string(ured.rank) + ", expected " + std::to_string(bs.r));
  bs.u_basis = Mat<Fq>(k, th.sigma.dim(), bs.r);
  for (int c = 0; c < bs.r; ++c)
    for (int rr = 0; rr < th.sigma.dim(); ++rr) bs.u_basis.at(rr, c) = ured.rref.at(c, rr);

  bs.forms.assign(bs.r, Mat<Fq>(k, d2, d2));
  Mat<Fq> stacked(k, bs.r, d2 * (d2 - 1) / 2);
  int pc = 0;
  for (int a = 0; a < d2; ++a)
    for (int b = a + 1; b < d2; ++b, ++pc) {
      Vec<Fq> ea(d2, k.zero()), eb(d2, k.zero());
      ea[a] = k.one();
      eb[b] = k.one();
      Vec<Fq> val = bs.pair_value(ea, eb);
      for (int idx = 0; idx < bs.r; ++idx) {
        bs.forms[idx].at(a, b) = val[idx];
        bs.forms[idx].at(b, a) = k.neg(val[idx]);
        stacked.at(idx, pc) = val[idx];
      }
    }
  if (bs.r > 0) {
    int srk = rank_of(stacked);
    if (srk != bs.r)
      fail(errc::validation, "beta_system: obstruction system has rank " + std::to_string(srk) +
                                 " of " + std::to_string(bs.r));
  }
  return bs;
}

Vec<Fq> splitting_obstruction(const BetaSystem& bs, const Vec<Fq>& s, const Vec<Fq>& sp) {
  const Fq& k = bs.theta.k;
  Vec<Fq> val = bs.pair_value(s, sp);
  bool vanish = true;
  for (const auto& x : val)
    if (!k.is_zero(x)) vanish = false;
  // independent route: membership of the raw product in the column span of b
  Vec<Fq> g = gamma_vec(bs.theta, s, sp);
  Mat<Fq> gm(k, static_cast<int>(g.size()), 1);
  gm.set_col(0, g);
  bool member = rank_of(hcat(bs.theta.b_raw, gm)) == rank_of(bs.theta.b_raw);
  if (member != vanish)
    fail(errc::internal, "splitting_obstruction: quotient and membership routes disagree");
  return val;
}

Vec<Fq> splitting_obstruction(const NetOfQuadrics& net, const Vec<Fq>& s, const Vec<Fq>& sp) {
  return splitting_obstruction(beta_system(net), s, sp);
}

DistinguishedPair distinguished_pair(const InstantonMonad& m, const SymplecticStructure& j,
                                     const Vec<Fq>& base) {
  const Fq& k = m.k;
  PointSplitting sp = splitting_at(k, base);
  for (const auto& y : enumerate_proj_points(k, 2))
    if (restricted_h0(m, line_at_y(k, sp, y), 0) >= 3)
      fail(errc::validation, "distinguished_pair: multi-jumping line through the base point");

  Hypernet h = hypernet_from_monad(m, j);
  NetOfQuadrics net = net_at_point(h, sp.n);
  BetaSystem bs = beta_system(net);

  const int n = m.n;
  Mat<Fq> fb = fiber_basis(m, sp.n);
  Mat<Fq> sec(k, 2 * n, 2);
  for (int a = 0; a < 2; ++a) {
    Vec<Fq> jv = j.J.transpose().apply(fb.col(n + a));  // row vector v^t J
    Vec<Fq> rep(static_cast<size_t>(3) * n, k.zero());
    for (int kk = 0; kk < 3; ++kk) {
      Vec<Fq> row = m.A[sp.comp[kk]].transpose().apply(jv);  // v^t J A(w_kk)
      for (int i = 0; i < n; ++i) rep[kk * n + i] = row[i];
    }
    sec.set_col(a, bs.theta.t2.project(rep));
  }
  if (rank_of(sec) != 2)
    fail(errc::validation, "distinguished_pair: fiber image is not two-dimensional");
  for (const auto& x : splitting_obstruction(bs, sec.col(0), sec.col(1)))
    if (!k.is_zero(x))
      fail(errc::validation, "distinguished_pair: obstruction does not vanish on the fiber image");

  // the pair must generate every stalk over rational points of the curve
  Vec<Fq> r0 = bs.theta.t2.lift(sec.col(0)), r1 = bs.theta.t2.lift(sec.col(1));
  for (const auto& y : enumerate_proj_points(k, 2)) {
    Mat<Fq> my = net.at(y);
    if (rank_of(my) == n) continue;
    Mat<Fq> aug(k, n, n + 2);
    for (int i = 0; i < n; ++i) {
      for (int c = 0; c < n; ++c) aug.at(i, c) = my.at(i, c);
      for (int kk = 0; kk < 3; ++kk) {
        aug.at(i, n) = k.add(aug.at(i, n), k.mul(r0[kk * n + i], y[kk]));
        aug.at(i, n + 1) = k.add(aug.at(i, n + 1), k.mul(r1[kk * n + i], y[kk]));
      }
    }
    if (rank_of(aug) != n)
      fail(errc::validation, "distinguished_pair: sections fail to generate a stalk of theta(2)");
  }
  return {sec, bs, net};
}

SingularityReport singularity_diagnostics(const BetaSystem& bs, const Mat<Fq>& kplane) {
  const Fq& k = bs.theta.k;
  const int n = bs.theta.n, d2 = bs.theta.t2.dim();
  if (kplane.rows() != d2 || kplane.cols() != 2)
    fail(errc::validation, "singularity_diagnostics: plane must be two coordinate columns");
  if (rank_of(kplane) != 2)
    fail(errc::validation, "singularity_diagnostics: plane basis is not two-dimensional");
  Vec<Fq> u = kplane.col(0), v = kplane.col(1);
  for (const auto& a : bs.forms)
    if (!k.is_zero(form_value(k, a, u, v)))
      fail(errc::validation, "singularity_diagnostics: obstruction does not vanish on the plane");

  // first-order deformations phi : K -> H/K against all forms:
  // a(phi(u), v) + a(u, phi(v)) = 0
  Quotient<Fq> hk(k, kplane);
  const int dq = hk.dim();
  Mat<Fq> cond(k, bs.r, 2 * dq);
  for (int t = 0; t < dq; ++t) {
    Vec<Fq> unit(dq, k.zero());
    unit[t] = k.one();
    Vec<Fq> f = hk.lift(unit);
    for (int idx = 0; idx < bs.r; ++idx) {
      cond.at(idx, t) = form_value(k, bs.forms[idx], f, v);
      cond.at(idx, dq + t) = form_value(k, bs.forms[idx], u, f);
    }
  }
  SingularityReport rep;
  rep.tangent_dim = 2 * dq - rank_of(cond);
  Mat<Fq> stack(k, bs.r * d2, d2);
  for (int idx = 0; idx < bs.r; ++idx)
    for (int rr = 0; rr < d2; ++rr)
      for (int cc = 0; cc < d2; ++cc) stack.at(idx * d2 + rr, cc) = bs.forms[idx].at(rr, cc);
  rep.common_kernel_dim = d2 - rank_of(stack);
  rep.curve_family_dim = n * (n + 3) / 2;
  rep.frame_dim = 4;
  rep.generic_tangent_dim = 4 * n - 4 - bs.r;
  rep.moduli_total = 8 * n - 3;
  rep.bookkeeping_exact =
      rep.curve_family_dim + rep.frame_dim + rep.tangent_dim == rep.moduli_total;
  return rep;
}

std::optional<Mat<Fq>> generic_isotropic_pair(const BetaSystem& bs, unsigned long long seed,
                                              int tries) {
  const Fq& k = bs.theta.k;
  const int d2 = bs.theta.t2.dim();
  Rng rng(seed);
  for (int t = 0; t < tries; ++t) {
    Vec<Fq> s = rng.vector(k, d2);
    bool zero = true;
    for (const auto& x : s)
      if (!k.is_zero(x)) zero = false;
    if (zero) continue;
    Mat<Fq> rows(k, bs.r, d2);
    for (int idx = 0; idx < bs.r; ++idx) {
      Vec<Fq> rv = bs.forms[idx].transpose().apply(s);  // s^t A_idx
      for (int c = 0; c < d2; ++c) rows.at(idx, c) = rv[c];
    }
    auto red = reduce(rows);
    for (int c = 0; c < red.kernel.cols(); ++c) {
      Mat<Fq> kp(k, d2, 2);
      kp.set_col(0, s);
      kp.set_col(1, red.kernel.col(c));
      if (rank_of(kp) != 2) continue;
      auto diag = singularity_diagnostics(bs, kp);
      if (diag.tangent_dim == diag.generic_tangent_dim) return kp;
    }
  }
  return std::nullopt;
}

JumpingOrder jumping_order(const InstantonMonad& m, const PluckerLine& l,
                           const SymplecticStructure* J) {
  int h0 = restricted_h0(m, l, 0);
  if (h0 >= 3) return {true, h0 - 1};
  if (!J) return {false, 0};
  const Fq& k = m.k;
  Vec<Fq> base = spanning_points(k, l).first;
  PointSplitting sp = splitting_at(k, base);
  NetOfQuadrics net = net_at_point(hypernet_from_monad(m, *J), base);
  return {true, discriminant_corank(net, y_point_of_line(k, sp, l))};
}

}  // namespace ilab
