#pragma once

#include <vector>

#include "artin/graph.hpp"
#include "artin/laurent.hpp"

namespace artin {

// Spanning forests of g as edge-index lists.
std::vector<std::vector<int>> spanning_forests(const LabeledGraph& g,
                                               long budget);

// Budget from ARTIN_FOREST_BUDGET, default 2,000,000 forests.
long forest_budget_from_env();

struct ForestFitting {
  // fitting[s - 1] = f_s for s = 1..|V|.
  std::vector<LaurentPoly> fitting;
  // Nontrivial invariant factors of M_1 in chain order.
  std::vector<LaurentPoly> invariant_factors;
  long forests = 0;
};

// Reference: every rooted forest is enumerated, roots as a Cartesian product.
std::vector<LaurentPoly> fitting_gcds_serial(const LabeledGraph& g,
                                             const Character& c,
                                             const FieldSpec& f,
                                             const std::vector<std::vector<int>>& forests);
// OpenMP over forests; the root choice is folded per tree, since the gcd of
// products over independent choices is the product of the gcds.
std::vector<LaurentPoly> fitting_gcds_parallel(const LabeledGraph& g,
                                               const Character& c,
                                               const FieldSpec& f,
                                               const std::vector<std::vector<int>>& forests);

// Needs a connected graph and a K-nonresonant character.
ForestFitting forest_fitting_h1(const LabeledGraph& g, const Character& c,
                                const FieldSpec& f, long budget);
ForestFitting forest_fitting_h1(const LabeledGraph& g, const Character& c,
                                const FieldSpec& f);

}  // namespace artin
