#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "artin/equivariant.hpp"
#include "artin/flag_complex.hpp"
#include "artin/graph.hpp"
#include "artin/laurent.hpp"

namespace fx {

using namespace artin;

struct Case {
  LabeledGraph g;
  Character c;
};

inline Case make_case(const std::vector<long>& m,
                      const std::vector<std::tuple<int, int, long>>& edges) {
  Case out;
  for (std::size_t i = 0; i < m.size(); ++i) out.g.add_vertex("v" + std::to_string(i));
  for (auto [u, v, l] : edges) out.g.add_edge(u, v, l);
  out.c = Character(out.g, m);
  return out;
}

inline Case dihedral() {
  Case out;
  out.g.add_vertex("u");
  out.g.add_vertex("v");
  out.g.add_edge(0, 1, 4);
  out.c = Character(out.g, {1, -1});
  return out;
}

// v1..v4 around a square, weights (1,2,1,2), one label-2 side.
inline Case square() {
  Case out;
  for (int i = 1; i <= 4; ++i) out.g.add_vertex("v" + std::to_string(i));
  out.g.add_edge(0, 1, 4);
  out.g.add_edge(1, 2, 4);
  out.g.add_edge(2, 3, 4);
  out.g.add_edge(0, 3, 2);
  out.c = Character(out.g, {1, 2, 1, 2});
  return out;
}

// Square v0..v3 with labels 2 and the diagonal v0v2 of label 4.
inline Case square_diagonal(bool prime) {
  Case out = make_case(prime ? std::vector<long>{-1, 0, 1, 0} : std::vector<long>{-1, 1, 1, 1},
                       {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}, {0, 3, 2}, {0, 2, 4}});
  return out;
}

struct RandomOptions {
  int max_vertices = 6;
  long max_weight = 3;
  bool allow_zero_weight = false;
  double edge_probability = 0.6;
  std::vector<long> labels{2, 4, 6};
};

// Random FC-type even graph with a random character, by rejection.
inline Case random_case(std::mt19937_64& rng, const RandomOptions& opt = {}) {
  std::uniform_int_distribution<int> nv(1, opt.max_vertices);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> lab(0, opt.labels.size() - 1);
  std::uniform_int_distribution<long> w(-opt.max_weight, opt.max_weight);
  for (;;) {
    int n = nv(rng);
    Case out;
    for (int i = 0; i < n; ++i) out.g.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng) < opt.edge_probability) out.g.add_edge(i, j, opt.labels[lab(rng)]);
    if (!is_fc_type(out.g)) continue;
    std::vector<long> m(static_cast<std::size_t>(n));
    for (auto& x : m) {
      do x = w(rng);
      while (x == 0 && !opt.allow_zero_weight);
    }
    out.c = Character(out.g, m);
    if (out.c.is_zero()) continue;
    out.c = normalize_character(out.c).first;
    return out;
  }
}

// Determinant by cofactor expansion; independent of the library's
// elimination.
inline LaurentPoly laplace_det(const PolyMatrix& m) {
  std::size_t n = m.rows();
  if (n == 0) return LaurentPoly::constant(m.field(), 1);
  if (n == 1) return m(0, 0);
  LaurentPoly out(m.field());
  std::vector<std::size_t> rows;
  for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    LaurentPoly term = m(0, j) * laplace_det(m.submatrix(rows, cols));
    if (j % 2 == 0) out += term;
    else out -= term;
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(std::min(k, n)), true);
  if (k > n) return out;
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// gcd of all s x s minors, normalized; zero when every minor vanishes.
inline LaurentPoly fitting_gcd(const PolyMatrix& m, std::size_t s) {
  LaurentPoly g(m.field());
  for (auto& r : subsets(m.rows(), s))
    for (auto& c : subsets(m.cols(), s)) g = gcd(g, laplace_det(m.submatrix(r, c)));
  return g;
}

// Free rank of H_{k+1} from the untwisted incidence matrices with every
// entry zeroed whose twisted coefficient vanishes identically.
inline long masked_free_rank(const FlagComplex& fc, const Character& c,
                             const FieldSpec& f, int k) {
  ResonanceSets res = resonance_sets(fc.graph(), c, f);
  auto masked_rank = [&](int kk) -> long {
    if (kk < 0 || kk > fc.dimension()) return 0;
    IncidenceMatrix b = boundary_matrix(fc, kk);
    const auto& cols = fc.simplices(kk);
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < cols[j].size(); ++i) {
        int v = cols[j][i];
        bool zero = res.vertex_resonant(v);
        for (int w : cols[j])
          if (w != v && res.edge_resonant(fc.graph().edge_index(v, w))) zero = true;
        if (zero) {
          int row = fc.index(facet(cols[j], i));
          b.entries[static_cast<std::size_t>(row)][j] = 0;
        }
      }
    return static_cast<long>(rank_over(b.entries, b.cols, f));
  };
  return static_cast<long>(fc.count(k)) - masked_rank(k) - masked_rank(k + 1);
}

}  // namespace fx
