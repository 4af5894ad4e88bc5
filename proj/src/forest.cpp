#include "artin/forest.hpp"

#include <cstdlib>
#include <functional>
#include <numeric>

#include "artin/error.hpp"

namespace artin {

long forest_budget_from_env() {
  const char* v = std::getenv("ARTIN_FOREST_BUDGET");
  if (v == nullptr || *v == '\0') return 2000000;
  char* end = nullptr;
  long b = std::strtol(v, &end, 10);
  return (end != nullptr && *end == '\0' && b > 0) ? b : 2000000;
}

std::vector<std::vector<int>> spanning_forests(const LabeledGraph& g,
                                               long budget) {
  std::size_t n = g.vertex_count();
  const auto& edges = g.edges();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  // Deletion/contraction over the edge list; union without path compression
  // so that undoing a union is a single assignment.
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == edges.size()) {
      if (static_cast<long>(out.size()) >= budget)
        throw Error(ErrorCode::ForestBudgetExceeded,
                    "more than " + std::to_string(budget) + " spanning forests");
      out.push_back(chosen);
      return;
    }
    rec(i + 1);
    int a = find(edges[i].u), b = find(edges[i].v);
    if (a == b) return;
    parent[static_cast<std::size_t>(b)] = a;
    chosen.push_back(static_cast<int>(i));
    rec(i + 1);
    chosen.pop_back();
    parent[static_cast<std::size_t>(b)] = b;
  };
  rec(0);
  return out;
}

namespace {

struct ForestShape {
  std::vector<std::vector<int>> trees;  // vertex sets
  std::vector<int> degree;
};

ForestShape shape(const LabeledGraph& g, const std::vector<int>& forest) {
  std::size_t n = g.vertex_count();
  ForestShape s;
  s.degree.assign(n, 0);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x
               ? x
               : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  for (int e : forest) {
    const Edge& ed = g.edges()[static_cast<std::size_t>(e)];
    ++s.degree[static_cast<std::size_t>(ed.u)];
    ++s.degree[static_cast<std::size_t>(ed.v)];
    parent[static_cast<std::size_t>(find(ed.u))] = find(ed.v);
  }
  std::vector<int> slot(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    int r = find(static_cast<int>(v));
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(s.trees.size());
      s.trees.push_back({});
    }
    s.trees[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(static_cast<int>(v));
  }
  return s;
}

struct Factors {
  std::vector<LaurentPoly> vertex;  // t^{m_v} - 1
  std::vector<LaurentPoly> edge;    // q(t^{m_e})
};

Factors factors(const LabeledGraph& g, const Character& c, const FieldSpec& f) {
  Factors fs;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    fs.vertex.push_back(normalize_unit(t_power_minus_one(f, c.m(static_cast<int>(v)))));
  for (auto& e : g.edges())
    fs.edge.push_back(normalize_unit(q_poly(f, e.half(), c.m_edge(e))));
  return fs;
}

// p_F q_F / p_V without the root factors: edges of F times
// (t_v - 1)^(deg_F(v) - 1) for every vertex in a nontrivial tree.
LaurentPoly forest_base(const Factors& fs, const LabeledGraph& g,
                        const std::vector<int>& forest, const ForestShape& sh) {
  LaurentPoly b = LaurentPoly::constant(g.edges().empty()
                                            ? fs.vertex.front().field()
                                            : fs.edge.front().field(),
                                        1);
  for (int e : forest) b *= fs.edge[static_cast<std::size_t>(e)];
  for (std::size_t v = 0; v < sh.degree.size(); ++v)
    if (sh.degree[v] > 1)
      b *= pow(fs.vertex[v], static_cast<unsigned>(sh.degree[v] - 1));
  return b;
}

void check_inputs(const LabeledGraph& g, const Character& c, const FieldSpec& f) {
  if (!resonance_sets(g, c, f).nonresonant())
    throw Error(ErrorCode::ResonantCharacter, "forest method needs a nonresonant character");
}

}  // namespace

std::vector<LaurentPoly> fitting_gcds_serial(
    const LabeledGraph& g, const Character& c, const FieldSpec& f,
    const std::vector<std::vector<int>>& forests) {
  check_inputs(g, c, f);
  std::size_t n = g.vertex_count();
  Factors fs = factors(g, c, f);
  std::vector<LaurentPoly> acc(n, LaurentPoly(f));
  for (auto& forest : forests) {
    ForestShape sh = shape(g, forest);
    std::size_t s = sh.trees.size();
    LaurentPoly base = forest_base(fs, g, forest, sh);
    // Odometer over root choices.
    std::vector<std::size_t> pick(s, 0);
    while (true) {
      LaurentPoly cand = base;
      for (std::size_t i = 0; i < s; ++i) {
        const auto& tree = sh.trees[i];
        // A singleton tree is its own root and contributes no factor.
        if (tree.size() > 1) cand *= fs.vertex[static_cast<std::size_t>(tree[pick[i]])];
      }
      acc[s - 1] = gcd(acc[s - 1], cand);
      std::size_t i = 0;
      while (i < s && ++pick[i] == sh.trees[i].size()) pick[i++] = 0;
      if (i == s) break;
    }
  }
  return acc;
}

std::vector<LaurentPoly> fitting_gcds_parallel(
    const LabeledGraph& g, const Character& c, const FieldSpec& f,
    const std::vector<std::vector<int>>& forests) {
  check_inputs(g, c, f);
  std::size_t n = g.vertex_count();
  Factors fs = factors(g, c, f);
  std::vector<LaurentPoly> acc(n, LaurentPoly(f));
#pragma omp parallel
  {
    std::vector<LaurentPoly> local(n, LaurentPoly(f));
#pragma omp for schedule(dynamic, 16)
    for (long idx = 0; idx < static_cast<long>(forests.size()); ++idx) {
      const auto& forest = forests[static_cast<std::size_t>(idx)];
      ForestShape sh = shape(g, forest);
      std::size_t s = sh.trees.size();
      if (local[s - 1].is_one()) continue;
      LaurentPoly cand = forest_base(fs, g, forest, sh);
      for (auto& tree : sh.trees) {
        if (tree.size() < 2) continue;
        LaurentPoly roots(f);
        for (int v : tree) roots = gcd(roots, fs.vertex[static_cast<std::size_t>(v)]);
        cand *= roots;
      }
      local[s - 1] = gcd(local[s - 1], cand);
    }
#pragma omp critical
    for (std::size_t s = 0; s < n; ++s) acc[s] = gcd(acc[s], local[s]);
  }
  return acc;
}

ForestFitting forest_fitting_h1(const LabeledGraph& g, const Character& c,
                                const FieldSpec& f, long budget) {
  require_valid(g);
  if (!g.connected())
    throw Error(ErrorCode::DisconnectedGraph, "forest method needs a connected graph");
  check_inputs(g, c, f);
  auto forests = spanning_forests(g, budget);
  ForestFitting out;
  out.forests = static_cast<long>(forests.size());
  out.fitting = fitting_gcds_parallel(g, c, f, forests);
  std::size_t n = g.vertex_count();
  // d_i = f_{n-i} / f_{n-i+1}, i = 1..n-1.
  for (std::size_t s = n - 1; s >= 1; --s) {
    const LaurentPoly& num = out.fitting[s - 1];
    const LaurentPoly& den = out.fitting[s];
    if (num.is_zero() || den.is_zero())
      throw Error(ErrorCode::Internal, "vanishing Fitting ideal on a connected graph");
    auto q = divide_exact(num, den);
    if (!q) throw Error(ErrorCode::Internal, "Fitting ideals are not nested");
    LaurentPoly d = normalize_unit(*q);
    if (!d.is_one()) out.invariant_factors.push_back(d);
  }
  return out;
}

ForestFitting forest_fitting_h1(const LabeledGraph& g, const Character& c,
                                const FieldSpec& f) {
  return forest_fitting_h1(g, c, f, forest_budget_from_env());
}

}  // namespace artin
