#include "ilab/geometry.hpp"

#include <algorithm>

namespace ilab {

namespace {

// index of (i,j), i<j, in the order 01,02,03,12,13,23
constexpr int pair_index[4][4] = {
    {-1, 0, 1, 2},
    {0, -1, 3, 4},
    {1, 3, -1, 5},
    {2, 4, 5, -1},
};

std::string vec_str(const Fq& k, const Vec<Fq>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += k.str(v[i]);
  }
  return s + ")";
}

}  // namespace

int first_nonzero(const Fq& k, const Vec<Fq>& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (!k.is_zero(v[i])) return static_cast<int>(i);
  return -1;
}

Vec<Fq> proj_normalize(const Fq& k, Vec<Fq> v) {
  int lead = first_nonzero(k, v);
  if (lead < 0) fail(errc::validation, "projective normalize: zero vector");
  const auto s = k.inv(v[lead]);
  for (auto& x : v) x = k.mul(x, s);
  return v;
}

bool proj_eq(const Fq& k, const Vec<Fq>& a, const Vec<Fq>& b) {
  if (a.size() != b.size()) return false;
  return proj_normalize(k, a) == proj_normalize(k, b);
}

FqV plucker_relation(const Fq& k, const Vec<Fq>& p) {
  // p01 p23 - p02 p13 + p03 p12
  return k.add(k.sub(k.mul(p[0], p[5]), k.mul(p[1], p[4])), k.mul(p[2], p[3]));
}

PluckerLine plucker_from_coords(const Fq& k, const Vec<Fq>& raw) {
  if (raw.size() != 6) fail(errc::validation, "Plucker line needs 6 coordinates");
  Vec<Fq> v(6);
  for (int i = 0; i < 6; ++i) v[i] = k.from_int(raw[i]);
  if (first_nonzero(k, v) < 0) fail(errc::validation, "Plucker line: zero vector");
  if (!k.is_zero(plucker_relation(k, v)))
    fail(errc::validation, "Plucker relation violated for " + vec_str(k, v));
  return PluckerLine{proj_normalize(k, v)};
}

PluckerLine line_through(const Fq& k, const Vec<Fq>& a, const Vec<Fq>& b) {
  if (a.size() != 4 || b.size() != 4) fail(errc::validation, "line_through: points need 4 coordinates");
  Vec<Fq> p(6);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      p[pair_index[i][j]] = k.sub(k.mul(a[i], b[j]), k.mul(a[j], b[i]));
  if (first_nonzero(k, p) < 0)
    fail(errc::validation, "line_through: proportional points " + vec_str(k, a) + ", " + vec_str(k, b));
  return PluckerLine{proj_normalize(k, p)};
}

std::pair<Vec<Fq>, Vec<Fq>> spanning_points(const Fq& k, const PluckerLine& l) {
  // columns of the antisymmetric Plucker matrix span the line
  Mat<Fq> m(k, 4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      m.at(i, j) = l.p[pair_index[i][j]];
      m.at(j, i) = k.neg(l.p[pair_index[i][j]]);
    }
  int c0 = -1;
  for (int c = 0; c < 4 && c0 < 0; ++c)
    if (first_nonzero(k, m.col(c)) >= 0) c0 = c;
  if (c0 < 0) fail(errc::internal, "spanning_points: zero Plucker matrix");
  Vec<Fq> a = m.col(c0);
  for (int c = c0 + 1; c < 4; ++c) {
    Vec<Fq> b = m.col(c);
    if (first_nonzero(k, b) < 0) continue;
    Mat<Fq> two(k, 2, 4);
    two.set_row(0, a);
    two.set_row(1, b);
    if (rank_of(two) == 2) return {proj_normalize(k, a), proj_normalize(k, b)};
  }
  fail(errc::internal, "spanning_points: rank below 2");
}

FqV meet_pairing(const Fq& k, const PluckerLine& a, const PluckerLine& b) {
  const Vec<Fq>&p = a.p, &q = b.p;
  FqV s = k.zero();
  s = k.add(s, k.mul(p[0], q[5]));
  s = k.sub(s, k.mul(p[1], q[4]));
  s = k.add(s, k.mul(p[2], q[3]));
  s = k.add(s, k.mul(p[3], q[2]));
  s = k.sub(s, k.mul(p[4], q[1]));
  s = k.add(s, k.mul(p[5], q[0]));
  return s;
}

bool lines_meet(const Fq& k, const PluckerLine& a, const PluckerLine& b) {
  return k.is_zero(meet_pairing(k, a, b));
}

bool line_contains_point(const Fq& k, const PluckerLine& l, const Vec<Fq>& x) {
  auto [a, b] = spanning_points(k, l);
  Mat<Fq> m(k, 3, 4);
  m.set_row(0, a);
  m.set_row(1, b);
  m.set_row(2, x);
  return rank_of(m) <= 2;
}

namespace {

// covector u with u . y = det[a; b; x; y]
Vec<Fq> cross3(const Fq& k, const Vec<Fq>& a, const Vec<Fq>& b, const Vec<Fq>& x) {
  Vec<Fq> u(4, k.zero());
  for (int l = 0; l < 4; ++l) {
    Mat<Fq> m(k, 3, 3);
    int cc = 0;
    for (int c = 0; c < 4; ++c) {
      if (c == l) continue;
      m.at(0, cc) = a[c];
      m.at(1, cc) = b[c];
      m.at(2, cc) = x[c];
      ++cc;
    }
    auto d = *reduce(m).det;
    u[l] = (l % 2 == 0) ? k.neg(d) : d;  // sign of the cofactor in column l of row 4
  }
  return u;
}

}  // namespace

Vec<Fq> plane_through(const Fq& k, const PluckerLine& l, const Vec<Fq>& x) {
  auto [a, b] = spanning_points(k, l);
  Vec<Fq> u = cross3(k, a, b, x);
  if (first_nonzero(k, u) < 0)
    fail(errc::validation, "plane_through: point " + vec_str(k, x) + " lies on the line");
  return proj_normalize(k, u);
}

PluckerLine line_from_planes(const Fq& k, const Vec<Fq>& u, const Vec<Fq>& w) {
  Vec<Fq> q(6);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      q[pair_index[i][j]] = k.sub(k.mul(u[i], w[j]), k.mul(u[j], w[i]));
  // dual coordinates back to point coordinates: complementary pairs with sign
  Vec<Fq> p(6);
  p[0] = q[5];
  p[1] = k.neg(q[4]);
  p[2] = q[3];
  p[3] = q[2];
  p[4] = k.neg(q[1]);
  p[5] = q[0];
  if (first_nonzero(k, p) < 0)
    fail(errc::validation, "line_from_planes: proportional planes");
  return PluckerLine{proj_normalize(k, p)};
}

std::optional<PluckerLine> transversal_through_point(const Fq& k, const Vec<Fq>& n,
                                                     const PluckerLine& l1,
                                                     const PluckerLine& l2) {
  if (line_contains_point(k, l1, n) || line_contains_point(k, l2, n))
    fail(errc::validation, "transversal_through_point: base point lies on an input line");
  if (lines_meet(k, l1, l2)) return std::nullopt;  // degenerate: not skew
  Vec<Fq> u = plane_through(k, l1, n);
  Vec<Fq> w = plane_through(k, l2, n);
  return line_from_planes(k, u, w);
}

namespace {

// basis x0^2, x0x1, x0x2, x0x3, x1^2, x1x2, x1x3, x2^2, x2x3, x3^2
constexpr int quad_pairs[10][2] = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1},
                                   {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};

Vec<Fq> quad_values(const Fq& k, const Vec<Fq>& x) {
  Vec<Fq> v(10);
  for (int t = 0; t < 10; ++t) v[t] = k.mul(x[quad_pairs[t][0]], x[quad_pairs[t][1]]);
  return v;
}

}  // namespace

FqV quadric_eval(const Fq& k, const Vec<Fq>& quadric, const Vec<Fq>& x) {
  auto v = quad_values(k, x);
  FqV s = k.zero();
  for (int t = 0; t < 10; ++t) s = k.add(s, k.mul(quadric[t], v[t]));
  return s;
}

Regulus regulus_through_three(const Fq& k, const PluckerLine& l1, const PluckerLine& l2,
                              const PluckerLine& l3) {
  require_pairwise_skew(k, {l1, l2, l3}, "regulus_through_three");
  // a quadric contains a line iff it kills both spanning points and their polar
  Mat<Fq> cond(k, 9, 10);
  const PluckerLine* ls[3] = {&l1, &l2, &l3};
  for (int li = 0; li < 3; ++li) {
    auto [a, b] = spanning_points(k, *ls[li]);
    Vec<Fq> ab(4);
    for (int i = 0; i < 4; ++i) ab[i] = k.add(a[i], b[i]);
    auto va = quad_values(k, a), vb = quad_values(k, b), vab = quad_values(k, ab);
    for (int t = 0; t < 10; ++t) {
      cond.at(3 * li + 0, t) = va[t];
      cond.at(3 * li + 1, t) = vb[t];
      cond.at(3 * li + 2, t) = k.sub(vab[t], k.add(va[t], vb[t]));
    }
  }
  auto red = reduce(cond);
  if (red.kernel.cols() != 1)
    fail(errc::validation, "regulus_through_three: quadric through the lines is not unique");
  Regulus reg;
  reg.quadric = proj_normalize(k, red.kernel.col(0));
  auto [a3, b3] = spanning_points(k, l3);
  reg.a3 = a3;
  reg.b3 = b3;
  reg.l1 = l1;
  reg.l2 = l2;
  return reg;
}

PluckerLine ruling_at(const Fq& k, const Regulus& reg, FqV s, FqV t) {
  Vec<Fq> x(4);
  for (int i = 0; i < 4; ++i) x[i] = k.add(k.mul(s, reg.a3[i]), k.mul(t, reg.b3[i]));
  auto tr = transversal_through_point(k, x, reg.l1, reg.l2);
  if (!tr) fail(errc::internal, "ruling_at: transversal vanished on a skew pair");
  return *tr;
}

Transversals transversals_to_four(const Fq& k, const PluckerLine& l1, const PluckerLine& l2,
                                  const PluckerLine& l3, const PluckerLine& l4) {
  require_pairwise_skew(k, {l1, l2, l3}, "transversals_to_four (first three)");
  // ruling(s,t) is quadratic in (s,t): planes through x(s,t) are linear in x,
  // and the plane meet is bilinear, so expand over constant covectors
  auto [a1, b1] = spanning_points(k, l1);
  auto [a2, b2] = spanning_points(k, l2);
  auto [a3, b3] = spanning_points(k, l3);
  Vec<Fq> c1 = cross3(k, a1, b1, a3), d1 = cross3(k, a1, b1, b3);
  Vec<Fq> c2 = cross3(k, a2, b2, a3), d2 = cross3(k, a2, b2, b3);

  auto dual_join = [&](const Vec<Fq>& u, const Vec<Fq>& w) {
    Vec<Fq> q(6), p(6);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        q[pair_index[i][j]] = k.sub(k.mul(u[i], w[j]), k.mul(u[j], w[i]));
    p[0] = q[5]; p[1] = k.neg(q[4]); p[2] = q[3];
    p[3] = q[2]; p[4] = k.neg(q[1]); p[5] = q[0];
    return p;
  };
  // ruling(s,t) = s^2 P + st Q + t^2 R (unnormalized Plucker vectors)
  Vec<Fq> P = dual_join(c1, c2);
  Vec<Fq> R = dual_join(d1, d2);
  Vec<Fq> Q(6);
  {
    Vec<Fq> q1 = dual_join(c1, d2), q2 = dual_join(d1, c2);
    for (int i = 0; i < 6; ++i) Q[i] = k.add(q1[i], q2[i]);
  }
  auto pair4 = [&](const Vec<Fq>& p) { return meet_pairing(k, PluckerLine{p}, l4); };
  FqV qa = pair4(P), qb = pair4(Q), qc = pair4(R);

  Transversals out;
  if (k.is_zero(qa) && k.is_zero(qb) && k.is_zero(qc)) {
    out.infinite = true;
    return out;
  }
  // roots of qa s^2 + qb s t + qc t^2 over P^1(F_p)
  std::vector<std::pair<FqV, FqV>> roots;
  if (k.is_zero(qc)) roots.emplace_back(k.zero(), k.one());  // (s:t) = (0:1)
  for (std::int64_t tv = 0; tv < k.p; ++tv) {
    FqV s = k.one(), t = k.from_int(tv);
    FqV val = k.add(k.add(qa, k.mul(qb, t)), k.mul(qc, k.mul(t, t)));
    if (k.is_zero(val)) roots.emplace_back(s, t);
  }
  // discriminant detects the tangent position exactly
  FqV disc = k.sub(k.mul(qb, qb), k.mul(k.from_int(4), k.mul(qa, qc)));
  out.double_root = k.is_zero(disc);
  for (auto& [s, t] : roots) {
    Vec<Fq> p(6);
    for (int i = 0; i < 6; ++i) {
      FqV v = k.mul(P[i], k.mul(s, s));
      v = k.add(v, k.mul(Q[i], k.mul(s, t)));
      v = k.add(v, k.mul(R[i], k.mul(t, t)));
      p[i] = v;
    }
    out.lines.push_back(PluckerLine{proj_normalize(k, p)});
  }
  std::sort(out.lines.begin(), out.lines.end());
  return out;
}

void require_pairwise_skew(const Fq& k, const std::vector<PluckerLine>& z, const char* what) {
  for (size_t i = 0; i < z.size(); ++i)
    for (size_t j = i + 1; j < z.size(); ++j)
      if (lines_meet(k, z[i], z[j]))
        fail(errc::validation, std::string(what) + ": lines " + std::to_string(i) + " and " +
                                   std::to_string(j) + " are not skew");
}

Secancy secancy_profile(const Fq& k, const PluckerLine& l, const std::vector<PluckerLine>& z) {
  require_pairwise_skew(k, z, "secancy_profile");
  for (size_t i = 0; i < z.size(); ++i)
    if (l == z[i])
      fail(errc::validation, "secancy_profile: line equals configuration member " + std::to_string(i));
  Secancy out;
  for (size_t i = 0; i < z.size(); ++i)
    if (lines_meet(k, l, z[i])) out.met.push_back(static_cast<int>(i));
  out.count = static_cast<int>(out.met.size());
  return out;
}

PointSplitting splitting_at(const Fq& k, const Vec<Fq>& n) {
  if (n.size() != 4) fail(errc::validation, "splitting_at: point needs 4 coordinates");
  PointSplitting s;
  s.n = proj_normalize(k, n);
  s.pivot = first_nonzero(k, s.n);
  for (int i = 0; i < 4; ++i)
    if (i != s.pivot) s.comp.push_back(i);
  return s;
}

Vec<Fq> lift_y(const Fq& k, const PointSplitting& s, const Vec<Fq>& y) {
  if (y.size() != 3) fail(errc::validation, "lift_y: Y-point needs 3 coordinates");
  Vec<Fq> x(4, k.zero());
  for (int t = 0; t < 3; ++t) x[s.comp[t]] = y[t];
  return x;
}

Vec<Fq> project_from(const Fq& k, const PointSplitting& s, const Vec<Fq>& x) {
  // remove the <N> component: the pivot coordinate of the result vanishes
  Vec<Fq> w(4);
  for (int i = 0; i < 4; ++i) w[i] = k.sub(x[i], k.mul(x[s.pivot], s.n[i]));
  Vec<Fq> y(3);
  for (int t = 0; t < 3; ++t) y[t] = w[s.comp[t]];
  if (first_nonzero(k, y) < 0)
    fail(errc::validation, "project_from: point coincides with the base point");
  return proj_normalize(k, y);
}

Vec<Fq> y_point_of_line(const Fq& k, const PointSplitting& s, const PluckerLine& l) {
  if (!line_contains_point(k, l, s.n))
    fail(errc::validation, "y_point_of_line: line misses the base point");
  auto [a, b] = spanning_points(k, l);
  if (!proj_eq(k, a, s.n)) return project_from(k, s, a);
  return project_from(k, s, b);
}

PluckerLine line_at_y(const Fq& k, const PointSplitting& s, const Vec<Fq>& y) {
  return line_through(k, s.n, lift_y(k, s, y));
}

std::vector<NgonVertex> ngon_vertices(const Fq& k, const std::vector<PluckerLine>& z,
                                      const Vec<Fq>& n) {
  require_pairwise_skew(k, z, "ngon_vertices");
  for (size_t i = 0; i < z.size(); ++i)
    if (line_contains_point(k, z[i], n))
      fail(errc::validation, "ngon_vertices: base point lies on line " + std::to_string(i));
  PointSplitting s = splitting_at(k, n);
  std::vector<NgonVertex> out;
  for (size_t i = 0; i < z.size(); ++i)
    for (size_t j = i + 1; j < z.size(); ++j) {
      auto tr = transversal_through_point(k, s.n, z[i], z[j]);
      if (!tr)
        fail(errc::validation, "ngon_vertices: no transversal for pair (" + std::to_string(i) +
                                   "," + std::to_string(j) + ")");
      NgonVertex v;
      v.i = static_cast<int>(i);
      v.j = static_cast<int>(j);
      v.y = y_point_of_line(k, s, *tr);
      out.push_back(std::move(v));
    }
  return out;
}

std::vector<Vec<Fq>> enumerate_proj_points(const Fq& k, int dim) {
  // leading-1 representatives, ordered by pivot then remaining digits
  std::vector<Vec<Fq>> out;
  int n = dim + 1;
  for (int pivot = 0; pivot < n; ++pivot) {
    int free_count = n - pivot - 1;
    std::int64_t total = 1;
    for (int i = 0; i < free_count; ++i) total *= k.p;
    for (std::int64_t code = 0; code < total; ++code) {
      Vec<Fq> v(n, k.zero());
      v[pivot] = k.one();
      std::int64_t c = code;
      for (int i = n - 1; i > pivot; --i) {
        v[i] = k.from_int(c % k.p);
        c /= k.p;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::int64_t count_lines(std::int64_t p) { return (p * p + 1) * (p * p + p + 1); }

std::vector<PluckerLine> enumerate_lines(const Fq& k) {
  if (k.p > 23) fail(errc::validation, "enumerate_lines: refusing to enumerate for p > 23");
  // canonical reduced row echelon 2x4 representatives by pivot pair
  std::vector<PluckerLine> out;
  out.reserve(static_cast<size_t>(count_lines(k.p)));
  for (int c0 = 0; c0 < 4; ++c0)
    for (int c1 = c0 + 1; c1 < 4; ++c1) {
      std::vector<int> free_cols;
      for (int c = 0; c < 4; ++c)
        if (c != c0 && c != c1 && c > c0) free_cols.push_back(c);
      // entries: row0 gets free columns > c0 (excluding c1), row1 gets free columns > c1
      std::vector<std::pair<int, int>> slots;  // (row, col)
      for (int c : free_cols) {
        if (c != c1 && c > c0) slots.emplace_back(0, c);
      }
      for (int c = c1 + 1; c < 4; ++c)
        if (c != c0 && c != c1) slots.emplace_back(1, c);
      std::int64_t total = 1;
      for (size_t i = 0; i < slots.size(); ++i) total *= k.p;
      for (std::int64_t code = 0; code < total; ++code) {
        Mat<Fq> m(k, 2, 4);
        m.at(0, c0) = k.one();
        m.at(1, c1) = k.one();
        std::int64_t c = code;
        for (size_t sidx = 0; sidx < slots.size(); ++sidx) {
          m.at(slots[sidx].first, slots[sidx].second) = k.from_int(c % k.p);
          c /= k.p;
        }
        out.push_back(line_through(k, m.row(0), m.row(1)));
      }
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ilab
