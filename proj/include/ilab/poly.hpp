// Homogeneous polynomials with exact coefficients, dense over the monomial
// basis of one degree. Monomials are ordered lexicographically descending;
// indices are computed combinatorially so no lookup tables are shared
// between threads.
#pragma once

#include <vector>

#include "ilab/matrix.hpp"

namespace ilab {

inline std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// number of monomials of total degree deg in nvars variables
inline int mono_count(int nvars, int deg) {
  if (deg < 0) return 0;
  if (nvars == 0) return deg == 0 ? 1 : 0;
  return static_cast<int>(binom(nvars + deg - 1, deg));
}

inline void mono_list_rec(int nvars, int deg, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
  if (nvars == 1) {
    cur.push_back(deg);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = deg; e >= 0; --e) {
    cur.push_back(e);
    mono_list_rec(nvars - 1, deg - e, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> mono_list(int nvars, int deg) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (nvars <= 0) {
    if (deg == 0) out.push_back({});
    return out;
  }
  mono_list_rec(nvars, deg, cur, out);
  return out;
}

// rank of an exponent vector in the lex-descending list of its degree
inline int mono_index(const std::vector<int>& e) {
  int nvars = static_cast<int>(e.size());
  int deg = 0;
  for (int x : e) deg += x;
  int idx = 0;
  for (int i = 0; i < nvars - 1; ++i) {
    for (int f = deg; f > e[i]; --f) idx += mono_count(nvars - 1 - i, deg - f);
    deg -= e[i];
  }
  return idx;
}

template <class F>
class GradedPoly {
 public:
  using value_type = typename F::value_type;

  GradedPoly() : k_(), nvars_(0), deg_(0) {}
  GradedPoly(F k, int nvars, int deg)
      : k_(k), nvars_(nvars), deg_(deg), c_(mono_count(nvars, deg), k.zero()) {
    if (nvars < 0 || deg < 0) fail(errc::validation, "GradedPoly: negative shape");
  }

  static GradedPoly constant(F k, int nvars, const value_type& v) {
    GradedPoly p(k, nvars, 0);
    p.c_[0] = v;
    return p;
  }
  // the linear form sum coeffs[i] * x_i
  static GradedPoly linear(F k, const Vec<F>& coeffs) {
    GradedPoly p(k, static_cast<int>(coeffs.size()), 1);
    for (size_t i = 0; i < coeffs.size(); ++i) p.c_[i] = coeffs[i];
    return p;
  }

  const F& field() const { return k_; }
  int nvars() const { return nvars_; }
  int degree() const { return deg_; }
  int terms() const { return static_cast<int>(c_.size()); }

  const value_type& coeff_at(int idx) const { return c_[idx]; }
  value_type& coeff_at(int idx) { return c_[idx]; }
  const value_type& coeff(const std::vector<int>& expo) const { return c_[mono_index(expo)]; }
  void set_coeff(const std::vector<int>& expo, const value_type& v) { c_[mono_index(expo)] = v; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!k_.is_zero(x)) return false;
    return true;
  }
  bool eq(const GradedPoly& o) const {
    if (nvars_ != o.nvars_ || deg_ != o.deg_ || !k_.same(o.k_)) return false;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!k_.eq(c_[i], o.c_[i])) return false;
    return true;
  }

  GradedPoly add(const GradedPoly& o) const {
    require_shape(o, "GradedPoly::add");
    GradedPoly r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = k_.add(c_[i], o.c_[i]);
    return r;
  }
  GradedPoly sub(const GradedPoly& o) const {
    require_shape(o, "GradedPoly::sub");
    GradedPoly r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = k_.sub(c_[i], o.c_[i]);
    return r;
  }
  GradedPoly scaled(const value_type& s) const {
    GradedPoly r = *this;
    for (auto& x : r.c_) x = k_.mul(x, s);
    return r;
  }

  GradedPoly mul(const GradedPoly& o) const {
    check_same_field(k_, o.k_, "GradedPoly::mul");
    if (nvars_ != o.nvars_) fail(errc::validation, "GradedPoly::mul: variable count differs");
    GradedPoly r(k_, nvars_, deg_ + o.deg_);
    auto me = mono_list(nvars_, deg_);
    auto oe = mono_list(nvars_, o.deg_);
    std::vector<int> s(nvars_);
    for (size_t i = 0; i < me.size(); ++i) {
      if (k_.is_zero(c_[i])) continue;
      for (size_t j = 0; j < oe.size(); ++j) {
        if (k_.is_zero(o.c_[j])) continue;
        for (int v = 0; v < nvars_; ++v) s[v] = me[i][v] + oe[j][v];
        int idx = mono_index(s);
        r.c_[idx] = k_.add(r.c_[idx], k_.mul(c_[i], o.c_[j]));
      }
    }
    return r;
  }

  value_type eval(const Vec<F>& x) const {
    if (static_cast<int>(x.size()) != nvars_)
      fail(errc::validation, "GradedPoly::eval: point dimension mismatch");
    auto es = mono_list(nvars_, deg_);
    value_type acc = k_.zero();
    for (size_t i = 0; i < es.size(); ++i) {
      if (k_.is_zero(c_[i])) continue;
      value_type t = c_[i];
      for (int v = 0; v < nvars_; ++v)
        for (int e = 0; e < es[i][v]; ++e) t = k_.mul(t, x[v]);
      acc = k_.add(acc, t);
    }
    return acc;
  }

  // substitute x_i = sum_j L(i,j) y_j; L is nvars x new_nvars
  GradedPoly linear_substitute(const Mat<F>& L) const {
    check_same_field(k_, L.field(), "GradedPoly::linear_substitute");
    if (L.rows() != nvars_)
      fail(errc::validation, "GradedPoly::linear_substitute: row count != variable count");
    int nv = L.cols();
    GradedPoly out(k_, nv, deg_);
    auto es = mono_list(nvars_, deg_);
    for (size_t i = 0; i < es.size(); ++i) {
      if (k_.is_zero(c_[i])) continue;
      GradedPoly term = constant(k_, nv, c_[i]);
      for (int v = 0; v < nvars_; ++v) {
        if (es[i][v] == 0) continue;
        GradedPoly lin = GradedPoly::linear(k_, L.row(v));
        for (int e = 0; e < es[i][v]; ++e) term = term.mul(lin);
      }
      out = out.add(term);
    }
    return out;
  }

 private:
  void require_shape(const GradedPoly& o, const char* where) const {
    check_same_field(k_, o.k_, where);
    if (nvars_ != o.nvars_ || deg_ != o.deg_)
      fail(errc::validation, std::string(where) + ": inhomogeneous operands");
  }

  F k_;
  int nvars_, deg_;
  std::vector<value_type> c_;
};

// determinant of a square matrix of homogeneous polynomials (all of one
// degree), by Laplace expansion along the first column; n stays tiny here
template <class F>
GradedPoly<F> poly_det(const std::vector<std::vector<GradedPoly<F>>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) fail(errc::validation, "poly_det: empty matrix");
  const F& k = m[0][0].field();
  const int nv = m[0][0].nvars();
  const int d = m[0][0].degree();
  if (n == 1) return m[0][0];
  GradedPoly<F> acc(k, nv, d * n);
  for (int i = 0; i < n; ++i) {
    if (m[i][0].is_zero()) continue;
    std::vector<std::vector<GradedPoly<F>>> minor;
    minor.reserve(n - 1);
    for (int r = 0; r < n; ++r) {
      if (r == i) continue;
      minor.push_back(std::vector<GradedPoly<F>>(m[r].begin() + 1, m[r].end()));
    }
    GradedPoly<F> t = m[i][0].mul(poly_det(minor));
    acc = (i % 2 == 0) ? acc.add(t) : acc.sub(t);
  }
  return acc;
}

}  // namespace ilab
