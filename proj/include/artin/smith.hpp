#pragma once

#include <vector>

#include "artin/equivariant.hpp"

namespace artin {

struct SmithForm {
  std::size_t rank = 0;
  // d_1 | d_2 | ... | d_rank, normalized (monic, nonzero constant term).
  std::vector<LaurentPoly> invariant_factors;
  std::vector<LaurentPoly> nontrivial() const;

  // Present when requested: left * m * diag(t^column_shift) * right equals
  // diagonal exactly; left and right are invertible over K[t].
  bool has_transforms = false;
  PolyMatrix left, right, diagonal;
  std::vector<long> column_shift;
};

SmithForm smith_normal_form(const PolyMatrix& m, bool keep_transforms = false);

// Rank over K(t).
std::size_t rank_over_fractions(const PolyMatrix& m);

}  // namespace artin
