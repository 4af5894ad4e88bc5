#include "artin/equivariant.hpp"

#include "artin/error.hpp"

namespace artin {

PolyMatrix PolyMatrix::identity(const FieldSpec& f, std::size_t n) {
  PolyMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly::constant(f, 1);
  return m;
}

bool PolyMatrix::is_zero() const {
  for (auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) const {
  PolyMatrix s(f_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

Mat<Scalar> PolyMatrix::evaluate(const Scalar& t) const {
  Mat<Scalar> m(f_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(t);
  return m;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

namespace {

LaurentPoly entry_product(const PolyMatrix& a, const PolyMatrix& b,
                          std::size_t i, std::size_t j) {
  LaurentPoly s(a.field());
  for (std::size_t l = 0; l < a.cols(); ++l)
    if (!a(i, l).is_zero() && !b(l, j).is_zero()) s += a(i, l) * b(l, j);
  return s;
}

void check_shapes(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::SizeMismatch, "matrix product shape mismatch");
}

}  // namespace

PolyMatrix multiply_serial(const PolyMatrix& a, const PolyMatrix& b) {
  check_shapes(a, b);
  PolyMatrix c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = entry_product(a, b, i, j);
  return c;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  check_shapes(a, b);
  PolyMatrix c(a.field(), a.rows(), b.cols());
  long n = static_cast<long>(a.rows() * b.cols());
  std::size_t bc = b.cols();
#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < n; ++idx) {
    std::size_t i = static_cast<std::size_t>(idx) / bc;
    std::size_t j = static_cast<std::size_t>(idx) % bc;
    c(i, j) = entry_product(a, b, i, j);
  }
  return c;
}

LaurentPoly determinant(const PolyMatrix& in) {
  if (in.rows() != in.cols())
    throw Error(ErrorCode::SizeMismatch, "determinant of a non-square matrix");
  const FieldSpec& f = in.field();
  std::size_t n = in.rows();
  if (n == 0) return LaurentPoly::constant(f, 1);
  PolyMatrix a = in;
  LaurentPoly prev = LaurentPoly::constant(f, 1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return LaurentPoly(f);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        auto q = divide_exact(v, prev);
        if (!q) throw Error(ErrorCode::Internal, "inexact Bareiss step");
        a(i, j) = std::move(*q);
      }
      a(i, k) = LaurentPoly(f);
    }
    prev = a(k, k);
  }
  LaurentPoly d = a(n - 1, n - 1);
  return sign > 0 ? d : -d;
}

std::string dump(const PolyMatrix& m) {
  std::string out = "#";
  for (std::size_t j = 0; j < m.cols(); ++j)
    out += "\t" + (j < m.col_labels.size() ? m.col_labels[j] : std::to_string(j));
  out += "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i < m.row_labels.size() ? m.row_labels[i] : std::to_string(i);
    for (std::size_t j = 0; j < m.cols(); ++j) out += "\t" + m(i, j).to_string();
    out += "\n";
  }
  return out;
}

LaurentPoly facet_coefficient(const LabeledGraph& g, const Character& c,
                              const FieldSpec& f, const Simplex& x,
                              std::size_t i) {
  int v = x[i];
  LaurentPoly e = t_power_minus_one(f, c.m(v));
  if (i % 2 == 1) e = -e;
  for (std::size_t j = 0; j < x.size() && !e.is_zero(); ++j) {
    if (j == i) continue;
    int w = x[j];
    e *= q_poly(f, g.label(v, w) / 2, c.m(v) + c.m(w));
  }
  return e;
}

PolyMatrix twisted_boundary(const FlagComplex& fc, const Character& c,
                            const FieldSpec& f, int k) {
  const auto& rows = fc.simplices(k - 1);
  const auto& cols = fc.simplices(k);
  PolyMatrix m(f, rows.size(), cols.size());
  for (auto& r : rows) m.row_labels.push_back(fc.label(r));
  for (auto& x : cols) m.col_labels.push_back(fc.label(x));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) {
      int row = fc.index(facet(cols[j], i));
      m(static_cast<std::size_t>(row), j) =
          facet_coefficient(fc.graph(), c, f, cols[j], i);
    }
  return m;
}

SimplexWeights simplex_weights(const FlagComplex& fc, const Character& c,
                               const FieldSpec& f, const Simplex& x) {
  const LabeledGraph& g = fc.graph();
  ResonanceSets rs = resonance_sets(g, c, f);
  SimplexWeights w{LaurentPoly::constant(f, 1), LaurentPoly::constant(f, 1)};
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!rs.vertex_resonant(x[i])) w.p *= t_power_minus_one(f, c.m(x[i]));
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      int e = g.edge_index(x[i], x[j]);
      if (rs.edge_resonant(e)) continue;
      w.q *= q_poly(f, g.label(x[i], x[j]) / 2, c.m(x[i]) + c.m(x[j]));
    }
  }
  return w;
}

SimplexWeights simplex_weights(const FlagComplex& fc, const Character& c,
                               const FieldSpec& f,
                               const std::vector<Simplex>& xs) {
  SimplexWeights w{LaurentPoly::constant(f, 1), LaurentPoly::constant(f, 1)};
  for (auto& x : xs) {
    SimplexWeights s = simplex_weights(fc, c, f, x);
    w.p *= s.p;
    w.q *= s.q;
  }
  return w;
}

namespace {

std::vector<std::size_t> indices(const FlagComplex& fc,
                                 const std::vector<Simplex>& xs, int dim) {
  std::vector<std::size_t> out;
  for (auto& x : xs) {
    int i = fc.index(x);
    if (i < 0 || static_cast<int>(x.size()) - 1 != dim)
      throw Error(ErrorCode::SizeMismatch,
                  "simplex " + fc.label(x) + " is not in degree " + std::to_string(dim));
    out.push_back(static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace

LaurentPoly minor(const FlagComplex& fc, const Character& c, const FieldSpec& f,
                  int k, const std::vector<Simplex>& xbar,
                  const std::vector<Simplex>& ybar) {
  if (xbar.size() != ybar.size())
    throw Error(ErrorCode::SizeMismatch, "minor needs |Xbar| = |Ybar|");
  PolyMatrix m = twisted_boundary(fc, c, f, k);
  return determinant(m.submatrix(indices(fc, ybar, k - 1), indices(fc, xbar, k)));
}

long untwisted_minor(const FlagComplex& fc, int k,
                     const std::vector<Simplex>& xbar,
                     const std::vector<Simplex>& ybar) {
  if (xbar.size() != ybar.size())
    throw Error(ErrorCode::SizeMismatch, "minor needs |Xbar| = |Ybar|");
  FieldSpec q = FieldSpec::rationals();
  IncidenceMatrix inc = boundary_matrix(fc, k);
  auto rows = indices(fc, ybar, k - 1);
  auto cols = indices(fc, xbar, k);
  PolyMatrix m(q, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      m(i, j) = LaurentPoly::constant(q, inc.entries[rows[i]][cols[j]]);
  LaurentPoly d = determinant(m);
  return d.is_zero() ? 0 : d.coeff(0).rational().get_num().get_si();
}

}  // namespace artin
