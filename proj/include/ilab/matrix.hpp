// Dense exact matrices over a field object, with reduced row echelon form as
// the single workhorse: rank, kernel basis, determinant and linear solving
// all come out of one deterministic elimination (first nonzero pivot, no
// reordering heuristics, so results are reproducible bit for bit).
#pragma once

#include <optional>
#include <vector>

#include "ilab/field.hpp"

namespace ilab {

template <class F>
using Vec = std::vector<typename F::value_type>;

template <class F>
class Mat {
 public:
  using value_type = typename F::value_type;

  Mat() : k_(), rows_(0), cols_(0) {}
  Mat(F k, int rows, int cols)
      : k_(k), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, k.zero()) {
    if (rows < 0 || cols < 0) fail(errc::validation, "negative matrix dimension");
  }

  static Mat identity(F k, int n) {
    Mat m(k, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = k.one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const F& field() const { return k_; }

  value_type& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const value_type& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Vec<F> row(int i) const {
    Vec<F> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }
  Vec<F> col(int j) const {
    Vec<F> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }
  void set_row(int i, const Vec<F>& r) {
    for (int j = 0; j < cols_; ++j) at(i, j) = r[j];
  }
  void set_col(int j, const Vec<F>& c) {
    for (int i = 0; i < rows_; ++i) at(i, j) = c[i];
  }

  Mat transpose() const {
    Mat t(k_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Mat add(const Mat& o) const {
    require_shape(o, "Mat::add");
    Mat r(k_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = k_.add(a_[i], o.a_[i]);
    return r;
  }
  Mat sub(const Mat& o) const {
    require_shape(o, "Mat::sub");
    Mat r(k_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = k_.sub(a_[i], o.a_[i]);
    return r;
  }
  Mat scaled(const value_type& s) const {
    Mat r(k_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = k_.mul(a_[i], s);
    return r;
  }
  Mat mul(const Mat& o) const {
    check_same_field(k_, o.k_, "Mat::mul");
    if (cols_ != o.rows_) fail(errc::validation, "Mat::mul: inner dimensions differ");
    Mat r(k_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int l = 0; l < cols_; ++l) {
        const value_type& ail = at(i, l);
        if (k_.is_zero(ail)) continue;
        for (int j = 0; j < o.cols_; ++j)
          r.at(i, j) = k_.add(r.at(i, j), k_.mul(ail, o.at(l, j)));
      }
    return r;
  }
  Vec<F> apply(const Vec<F>& v) const {
    if (static_cast<int>(v.size()) != cols_)
      fail(errc::validation, "Mat::apply: size mismatch");
    Vec<F> r(rows_, k_.zero());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!k_.is_zero(at(i, j))) r[i] = k_.add(r[i], k_.mul(at(i, j), v[j]));
    return r;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!k_.is_zero(x)) return false;
    return true;
  }
  bool eq(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !k_.same(o.k_)) return false;
    for (size_t i = 0; i < a_.size(); ++i)
      if (!k_.eq(a_[i], o.a_[i])) return false;
    return true;
  }

 private:
  void require_shape(const Mat& o, const char* where) const {
    check_same_field(k_, o.k_, where);
    if (rows_ != o.rows_ || cols_ != o.cols_)
      fail(errc::validation, std::string(where) + ": shape mismatch");
  }

  F k_;
  int rows_, cols_;
  std::vector<value_type> a_;
};

template <class F>
Mat<F> hcat(const Mat<F>& a, const Mat<F>& b) {
  check_same_field(a.field(), b.field(), "hcat");
  if (a.rows() != b.rows()) fail(errc::validation, "hcat: row mismatch");
  Mat<F> r(a.field(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

template <class F>
Mat<F> vcat(const Mat<F>& a, const Mat<F>& b) {
  check_same_field(a.field(), b.field(), "vcat");
  if (a.cols() != b.cols()) fail(errc::validation, "vcat: column mismatch");
  Mat<F> r(a.field(), a.rows() + b.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b.at(i, j);
  }
  return r;
}

// Echelon data of one matrix. kernel columns form a basis of the right null
// space; det is present exactly for square input.
template <class F>
struct Reduced {
  int rank = 0;
  std::vector<int> pivots;  // pivot column per echelon row
  Mat<F> rref;
  Mat<F> kernel;
  std::optional<typename F::value_type> det;
};

template <class F>
Reduced<F> reduce(const Mat<F>& m) {
  const F& k = m.field();
  Reduced<F> out;
  out.rref = m;
  Mat<F>& a = out.rref;
  const int rows = a.rows(), cols = a.cols();
  bool track_det = rows == cols;
  typename F::value_type det = k.one();
  bool det_zero = false;

  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!k.is_zero(a.at(i, c))) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
      if (track_det) det = k.neg(det);
    }
    if (track_det) det = k.mul(det, a.at(r, c));
    const auto ip = k.inv(a.at(r, c));
    for (int j = c; j < cols; ++j) a.at(r, j) = k.mul(a.at(r, j), ip);
    for (int i = 0; i < rows; ++i) {
      if (i == r || k.is_zero(a.at(i, c))) continue;
      const auto f = a.at(i, c);
      for (int j = c; j < cols; ++j)
        a.at(i, j) = k.sub(a.at(i, j), k.mul(f, a.at(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  if (track_det && out.rank < rows) det_zero = true;

  std::vector<char> is_pivot(cols, 0);
  for (int c : out.pivots) is_pivot[c] = 1;
  out.kernel = Mat<F>(k, cols, cols - out.rank);
  int kc = 0;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    out.kernel.at(c, kc) = k.one();
    for (int i = 0; i < out.rank; ++i)
      out.kernel.at(out.pivots[i], kc) = k.neg(a.at(i, c));
    ++kc;
  }
  if (rows == cols) out.det = det_zero ? k.zero() : det;
  return out;
}

template <class F>
int rank_of(const Mat<F>& m) {
  return reduce(m).rank;
}

template <class F>
struct SolveResult {
  bool consistent = false;
  Vec<F> particular;  // empty unless consistent
  Mat<F> kernel;      // of the homogeneous system
};

// Solve A x = b. The kernel basis is shared by every right hand side.
template <class F>
SolveResult<F> solve(const Mat<F>& a, const Vec<F>& b) {
  const F& k = a.field();
  if (static_cast<int>(b.size()) != a.rows())
    fail(errc::validation, "solve: inhomogeneous input, target length != row count");
  Mat<F> bm(k, a.rows(), 1);
  bm.set_col(0, b);
  Reduced<F> red = reduce(hcat(a, bm));
  SolveResult<F> out;
  out.kernel = reduce(a).kernel;
  for (int i = 0; i < red.rank; ++i)
    if (red.pivots[i] == a.cols()) return out;  // pivot in the target column
  out.consistent = true;
  out.particular.assign(a.cols(), k.zero());
  for (int i = 0; i < red.rank; ++i)
    out.particular[red.pivots[i]] = red.rref.at(i, a.cols());
  return out;
}

// Coordinates on the quotient of k^ambient by the column span of a matrix.
// The complement basis is the set of standard coordinates away from the
// pivots of the span, in increasing order; project() composed with lift()
// is the identity, and contains(v) iff project(v) == 0.
template <class F>
class Quotient {
 public:
  Quotient() = default;
  Quotient(F k, const Mat<F>& span_cols) : k_(k), ambient_(span_cols.rows()) {
    Reduced<F> red = reduce(span_cols.transpose());
    sub_rank_ = red.rank;
    rows_ = Mat<F>(k, red.rank, ambient_);
    for (int i = 0; i < red.rank; ++i)
      for (int j = 0; j < ambient_; ++j) rows_.at(i, j) = red.rref.at(i, j);
    pivots_ = red.pivots;
    std::vector<char> is_pivot(ambient_, 0);
    for (int c : pivots_) is_pivot[c] = 1;
    for (int c = 0; c < ambient_; ++c)
      if (!is_pivot[c]) free_.push_back(c);
  }

  int ambient() const { return ambient_; }
  int dim() const { return ambient_ - sub_rank_; }
  int subspace_dim() const { return sub_rank_; }
  const std::vector<int>& complement_positions() const { return free_; }

  Vec<F> project(const Vec<F>& v) const {
    if (static_cast<int>(v.size()) != ambient_)
      fail(errc::validation, "Quotient::project: size mismatch");
    Vec<F> w = v;
    for (int i = 0; i < sub_rank_; ++i) {
      const auto f = w[pivots_[i]];
      if (k_.is_zero(f)) continue;
      for (int j = 0; j < ambient_; ++j)
        w[j] = k_.sub(w[j], k_.mul(f, rows_.at(i, j)));
    }
    Vec<F> out(free_.size());
    for (size_t t = 0; t < free_.size(); ++t) out[t] = w[free_[t]];
    return out;
  }

  Vec<F> lift(const Vec<F>& coords) const {
    if (coords.size() != free_.size())
      fail(errc::validation, "Quotient::lift: size mismatch");
    Vec<F> v(ambient_, k_.zero());
    for (size_t t = 0; t < free_.size(); ++t) v[free_[t]] = coords[t];
    return v;
  }

  bool contains(const Vec<F>& v) const {
    for (const auto& x : project(v))
      if (!k_.is_zero(x)) return false;
    return true;
  }

 private:
  F k_;
  int ambient_ = 0;
  int sub_rank_ = 0;
  Mat<F> rows_;  // RREF rows spanning the subspace
  std::vector<int> pivots_;
  std::vector<int> free_;
};

}  // namespace ilab
