#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "artin/flag_complex.hpp"
#include "artin/graph.hpp"
#include "artin/linalg.hpp"
#include "artin/residue.hpp"

namespace artin {

struct FacetDrop {
  std::size_t row = 0;  // index of the facet one degree down
  int sign = 1;          // incidence sign (-1)^i
  int drop = 0;          // w(X) - w(facet)
  KdElement unit;        // (sign * coefficient / Phi_d^drop)(zeta_d), nonzero
};

// Flag complex with the Phi_d-multiplicity weights w(X) = mult_d(p_X q_X).
struct WeightedComplex {
  long d = 0;
  FlagComplex fc;
  std::shared_ptr<const ResidueField> field;
  std::vector<std::vector<int>> weights;                   // [k + 1][i]
  std::vector<std::vector<std::vector<FacetDrop>>> facets;  // [k + 1][column]

  int weight(int k, std::size_t i) const {
    return weights[static_cast<std::size_t>(k + 1)][i];
  }
  int max_weight() const;
};

// Needs a nonresonant character over Q.
WeightedComplex weighted_complex(const FlagComplex& fc, const Character& c, long d);

// Boundary C_n -> C_{n-1} of the tau-graded complex modulo tau^s over K_d.
// Block (row, col) holds unit * tau^drop; row/column index = simplex * s + l.
Mat<KdElement> graded_boundary(const WeightedComplex& wc, int n, int s);

using Bidegree = std::pair<int, int>;  // (p, q), total degree p + q

struct PageTable {
  long d = 0;
  int min_degree = -1;
  int max_degree = -1;
  int max_weight = 0;
  // pages[s][(p, q)] = dim E^s_(p,q) for s = 0..last_page(); zero entries
  // are omitted.
  std::vector<std::map<Bidegree, long>> pages;
  std::map<Bidegree, long> infinity;
  // Second route: truncated[s][n - min_degree] = dim H_n(R / tau^s) of the
  // tau-graded complex; truncated[0] is all zeros.
  std::vector<std::vector<long>> truncated;

  int last_page() const { return static_cast<int>(pages.size()) - 1; }
  long h(int s, int p, int q) const;
  long h_inf(int p, int q) const;
  long total(int s, int n) const;
  long total_inf(int n) const;
  // h^s_n from first differences of the truncated homology dimensions.
  long total_truncated(int s, int n) const;
  // Both routes give the same aggregated page dimensions for every s, n.
  bool routes_agree() const;
  // The last computed page equals the stable page.
  bool degenerates() const;
};

// Pages s = 0..max(s_max, max_weight + 1) over K_d, plus the stable page.
PageTable page_dims(const WeightedComplex& wc, int s_max);
// Filtered-complex route over Q with the plain incidence signs; units are
// coboundaries, so the result must equal page_dims.
PageTable page_dims_untwisted(const WeightedComplex& wc, int s_max);

struct TorsionTable {
  long d = 0;
  // n[k][j - 1] = n_{k,j}(d); each list has at least k + 2 entries.
  std::map<int, std::vector<long>> n;
  long at(int k, int j) const;
};

// r[k] = reduced Betti numbers for k = 0..; solves for k = 0..kmax.
TorsionTable solve_torsion(const PageTable& pt, const std::vector<long>& r,
                           int kmax);
bool stable_page_matches(const PageTable& pt, const std::vector<long>& r);
bool jordan_bound_check(const TorsionTable& tt);

}  // namespace artin
