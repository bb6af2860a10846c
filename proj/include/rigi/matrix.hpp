#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "rigi/fp.hpp"

namespace rigi {

using Rat = mpq_class;

template <class S>
inline bool is_zero_scalar(const S& x) {
  return x == S(0);
}
template <>
inline bool is_zero_scalar<Fp>(const Fp& x) {
  return x.is_zero();
}
template <>
inline bool is_zero_scalar<Rat>(const Rat& x) {
  return sgn(x) == 0;
}

// Dense row-major matrix over an exact scalar (Fp or Rat). All entries of a
// matrix share one scalar mode by construction.
template <class S>
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<S> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, S(0)) {}

  S& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const S& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  std::vector<S> row(std::size_t i) const {
    return std::vector<S>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
  }

  Mat transposed() const {
    Mat t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = S(1);
    return m;
  }
};

// Incrementally maintained reduced row basis (row space in RREF). Pivoting
// picks the first nonzero column; no tolerances exist anywhere.
template <class S>
class RowBasis {
 public:
  explicit RowBasis(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Reduces v in place against the basis. Returns true iff v reduces to zero,
  // i.e. v was already in the row space.
  bool reduce(std::vector<S>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const S& c = v[pivot_[r]];
      if (is_zero_scalar(c)) continue;
      S f = c;  // basis rows are pivot-normalized to 1
      const std::vector<S>& b = rows_[r];
      for (std::size_t j = pivot_[r]; j < cols_; ++j)
        if (!is_zero_scalar(b[j])) v[j] -= f * b[j];
    }
    for (std::size_t j = 0; j < cols_; ++j)
      if (!is_zero_scalar(v[j])) return false;
    return true;
  }

  // Reduce-and-insert. Returns true iff the row was independent (rank grew).
  bool insert(std::vector<S> v) {
    if (reduce(v)) return false;
    std::size_t p = 0;
    while (is_zero_scalar(v[p])) ++p;
    S inv = S(1) / v[p];
    for (std::size_t j = p; j < cols_; ++j) v[j] = v[j] * inv;
    // Back-substitute into existing rows to keep the basis fully reduced.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      S c = rows_[r][p];
      if (is_zero_scalar(c)) continue;
      for (std::size_t j = p; j < cols_; ++j) rows_[r][j] -= c * v[j];
    }
    // Insert keeping pivots sorted.
    std::size_t pos = 0;
    while (pos < pivot_.size() && pivot_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivot_.insert(pivot_.begin() + pos, p);
    return true;
  }

  const std::vector<std::vector<S>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivot_; }

 private:
  std::size_t cols_;
  std::vector<std::vector<S>> rows_;
  std::vector<std::size_t> pivot_;
};

template <class S>
int rank_of(const Mat<S>& m) {
  RowBasis<S> basis(m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) basis.insert(m.row(i));
  return basis.rank();
}

template <class S>
struct SubspaceBasis {
  std::vector<std::vector<S>> vectors;
  int dimension() const { return static_cast<int>(vectors.size()); }
};

// Basis of {v : M v = 0}, dimension cols - rank.
template <class S>
SubspaceBasis<S> right_nullspace(const Mat<S>& m) {
  RowBasis<S> basis(m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) basis.insert(m.row(i));
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t p : basis.pivots()) is_pivot[p] = true;
  SubspaceBasis<S> out;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<S> v(m.cols, S(0));
    v[f] = S(1);
    for (std::size_t r = 0; r < basis.rows().size(); ++r)
      v[basis.pivots()[r]] = -basis.rows()[r][f];
    out.vectors.push_back(std::move(v));
  }
  return out;
}

// Basis of {s : s M = 0}, dimension rows - rank.
template <class S>
SubspaceBasis<S> left_nullspace(const Mat<S>& m) {
  return right_nullspace(m.transposed());
}

template <class S>
std::vector<S> mat_vec(const Mat<S>& m, const std::vector<S>& v) {
  std::vector<S> out(m.rows, S(0));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (!is_zero_scalar(m.at(i, j))) out[i] += m.at(i, j) * v[j];
  return out;
}

template <class S>
std::vector<S> vec_mat(const std::vector<S>& s, const Mat<S>& m) {
  std::vector<S> out(m.cols, S(0));
  for (std::size_t i = 0; i < m.rows; ++i)
    if (!is_zero_scalar(s[i]))
      for (std::size_t j = 0; j < m.cols; ++j) out[j] += s[i] * m.at(i, j);
  return out;
}

}  // namespace rigi
