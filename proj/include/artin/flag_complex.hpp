#pragma once

#include <map>
#include <string>
#include <vector>

#include "artin/graph.hpp"
#include "artin/linalg.hpp"

namespace artin {

// Sorted vertex indices; the empty simplex has dimension -1.
using Simplex = std::vector<int>;

// Augmented complex of spherical cliques. The chain degree of a simplex is
// its dimension, so degree -1 holds the empty simplex alone.
class FlagComplex {
 public:
  FlagComplex() = default;
  explicit FlagComplex(const LabeledGraph& g);

  const LabeledGraph& graph() const { return g_; }
  int dimension() const { return static_cast<int>(layers_.size()) - 2; }
  // Empty for k outside [-1, dimension()].
  const std::vector<Simplex>& simplices(int k) const;
  std::size_t count(int k) const { return simplices(k).size(); }
  int index(const Simplex& s) const;
  std::vector<long> f_vector() const;  // counts for k = -1..dimension()
  std::string label(const Simplex& s) const;

 private:
  LabeledGraph g_;
  std::vector<std::vector<Simplex>> layers_;  // layers_[k + 1]
  std::vector<std::map<Simplex, int>> index_;
};

FlagComplex build_flag_complex(const LabeledGraph& g);

// Facet of x dropping position i, with sign (-1)^i.
Simplex facet(const Simplex& x, std::size_t i);

// Untwisted boundary C_k -> C_{k-1}: rows are (k-1)-simplices, columns
// k-simplices. Out-of-range k gives an empty matrix of the right shape.
struct IncidenceMatrix {
  int k = 0;
  std::size_t rows = 0, cols = 0;
  IntMatrix entries;
};

IncidenceMatrix boundary_matrix(const FlagComplex& fc, int k);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner,
                   std::size_t cols);

// im_k = rank of boundary_matrix(k) for k = 0..dimension()+1.
std::vector<long> image_dims(const FlagComplex& fc, const FieldSpec& f);
// r_k = dim of reduced homology for k = 0..dimension(). The augmented
// complex has r_{-1} = 0 whenever the graph is nonempty.
std::vector<long> reduced_homology_ranks(const FlagComplex& fc,
                                         const FieldSpec& f);

}  // namespace artin
