#pragma once

#include <string>
#include <vector>

#include "artin/flag_complex.hpp"
#include "artin/graph.hpp"
#include "artin/laurent.hpp"
#include "artin/linalg.hpp"

namespace artin {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), a_(rows * cols, LaurentPoly(f)) {}
  static PolyMatrix identity(const FieldSpec& f, std::size_t n);

  const FieldSpec& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  LaurentPoly& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  bool is_zero() const;
  PolyMatrix submatrix(const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) const;
  Mat<Scalar> evaluate(const Scalar& t) const;
  bool operator==(const PolyMatrix& o) const;

  // Optional simplex labels used by dump().
  std::vector<std::string> row_labels, col_labels;

 private:
  FieldSpec f_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<LaurentPoly> a_;
};

// OpenMP over output entries; multiply_serial is the reference.
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix multiply_serial(const PolyMatrix& a, const PolyMatrix& b);

// Fraction-free elimination over the Laurent ring.
LaurentPoly determinant(const PolyMatrix& m);

// Deterministic text dump: header row of column labels, then one line per
// row: label followed by tab-separated entries.
std::string dump(const PolyMatrix& m);

// Coefficient of the facet dropping position i of x in the twisted boundary.
LaurentPoly facet_coefficient(const LabeledGraph& g, const Character& c,
                              const FieldSpec& f, const Simplex& x,
                              std::size_t i);

// M_k: rows (k-1)-simplices, columns k-simplices.
PolyMatrix twisted_boundary(const FlagComplex& fc, const Character& c,
                            const FieldSpec& f, int k);

struct SimplexWeights {
  LaurentPoly p;
  LaurentPoly q;
  LaurentPoly product() const { return p * q; }
};

// Products over the non-resonant vertices and edges of x only.
SimplexWeights simplex_weights(const FlagComplex& fc, const Character& c,
                               const FieldSpec& f, const Simplex& x);
SimplexWeights simplex_weights(const FlagComplex& fc, const Character& c,
                               const FieldSpec& f,
                               const std::vector<Simplex>& xs);

LaurentPoly minor(const FlagComplex& fc, const Character& c, const FieldSpec& f,
                  int k, const std::vector<Simplex>& xbar,
                  const std::vector<Simplex>& ybar);
// Same minor of the untwisted incidence matrix.
long untwisted_minor(const FlagComplex& fc, int k,
                     const std::vector<Simplex>& xbar,
                     const std::vector<Simplex>& ybar);

}  // namespace artin
