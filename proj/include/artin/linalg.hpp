#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "artin/field.hpp"

namespace artin {

// Dense matrix over a field type T with T(Context, long) and T::context().
template <class T>
class Mat {
 public:
  using Context = typename T::Context;

  Mat(const Context& ctx, std::size_t rows, std::size_t cols)
      : ctx_(ctx), rows_(rows), cols_(cols), a_(rows * cols, T(ctx, 0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Context& context() const { return ctx_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

 private:
  Context ctx_;
  std::size_t rows_, cols_;
  std::vector<T> a_;
};

template <class T>
using Vec = std::vector<T>;

// Row-reduces m in place; returns pivot columns.
template <class T>
std::vector<std::size_t> row_reduce(Mat<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    T inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank(Mat<T> m) {
  return row_reduce(m).size();
}

// Basis of the null space {x : m x = 0}, as column vectors.
template <class T>
std::vector<Vec<T>> kernel_basis(Mat<T> m) {
  std::vector<std::size_t> piv = row_reduce(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Vec<T>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec<T> v(m.cols(), T(m.context(), 0));
    v[f] = T(m.context(), 1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
    out.push_back(std::move(v));
  }
  return out;
}

// Rank of the span of the given vectors (all of length n).
template <class T>
std::size_t span_rank(const typename T::Context& ctx,
                      const std::vector<Vec<T>>& vs, std::size_t n) {
  if (vs.empty()) return 0;
  Mat<T> m(ctx, vs.size(), n);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = vs[i][j];
  return rank(std::move(m));
}

template <class T>
Vec<T> mat_vec(const Mat<T>& m, const Vec<T>& x) {
  Vec<T> y(m.rows(), T(m.context(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !x[j].is_zero()) y[i] += m(i, j) * x[j];
  return y;
}

using IntMatrix = std::vector<std::vector<long>>;

// Fraction-free (Bareiss) rank of an integer matrix over Q.
std::size_t rank_bareiss(const IntMatrix& m, std::size_t cols);
// Rank over F_p.
std::size_t rank_mod_p(const IntMatrix& m, std::size_t cols, std::uint32_t p);
// Rank over the given field.
std::size_t rank_over(const IntMatrix& m, std::size_t cols, const FieldSpec& f);

}  // namespace artin
