#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "artin/cyclotomic.hpp"
#include "artin/error.hpp"
#include "artin/forest.hpp"
#include "artin/homology.hpp"
#include "support.hpp"

using namespace artin;

namespace {

const FieldSpec Q = FieldSpec::rationals();

bool acyclic(const LabeledGraph& g, unsigned mask) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    if (!(mask >> e & 1)) continue;
    int a = find(g.edges()[e].u), b = find(g.edges()[e].v);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

std::vector<std::string> strings(const std::vector<LaurentPoly>& v) {
  std::vector<std::string> out;
  for (auto& p : v) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST(Forest, CountMatchesSubsetEnumeration) {
  std::mt19937_64 rng(30);
  for (int it = 0; it < 40; ++it) {
    fx::Case c = fx::random_case(rng);
    if (c.g.edges().size() > 14) continue;
    long brute = 0;
    for (unsigned mask = 0; mask < (1u << c.g.edges().size()); ++mask) brute += acyclic(c.g, mask);
    EXPECT_EQ(static_cast<long>(spanning_forests(c.g, 1000000).size()), brute);
  }
}

TEST(Forest, Examples) {
  fx::Case d = fx::dihedral();
  ForestFitting fd = forest_fitting_h1(d.g, d.c, Q);
  EXPECT_EQ(strings(fd.invariant_factors), (std::vector<std::string>{"-1 + t"}));
  EXPECT_EQ(fd.forests, 2);

  fx::Case s = fx::square();
  ForestFitting fs = forest_fitting_h1(s.g, s.c, Q);
  EXPECT_EQ(strings(fs.invariant_factors),
            (std::vector<std::string>{"-1 + t", "-1 + t - t^3 + t^4", "-1 + t^2 - t^3 + t^5"}));

  // tree with labels 2 and unit weights: (t - 1)^(|V| - 1), semisimple
  fx::Case tree = fx::make_case({1, 1, 1, 1}, {{0, 1, 2}, {1, 2, 2}, {1, 3, 2}});
  ForestFitting ft = forest_fitting_h1(tree.g, tree.c, Q);
  EXPECT_EQ(strings(ft.invariant_factors), (std::vector<std::string>{"-1 + t", "-1 + t", "-1 + t"}));
}

TEST(Forest, Preconditions) {
  fx::Case two = fx::make_case({1, 1}, {});
  EXPECT_THROW(forest_fitting_h1(two.g, two.c, Q), Error);
  fx::Case res = fx::make_case({1, 0}, {{0, 1, 2}});
  EXPECT_THROW(forest_fitting_h1(res.g, res.c, Q), Error);
  fx::Case s = fx::square();
  EXPECT_THROW(forest_fitting_h1(s.g, s.c, Q, 3), Error);
}

TEST(Forest, BudgetFromEnvironment) {
  setenv("ARTIN_FOREST_BUDGET", "12", 1);
  EXPECT_EQ(forest_budget_from_env(), 12);
  setenv("ARTIN_FOREST_BUDGET", "junk", 1);
  EXPECT_EQ(forest_budget_from_env(), 2000000);
  unsetenv("ARTIN_FOREST_BUDGET");
}

TEST(Forest, SerialParallelAndSmithAgree) {
  std::mt19937_64 rng(31);
  int compared = 0;
  for (int it = 0; it < 80; ++it) {
    fx::Case c = fx::random_case(rng);
    if (!c.g.connected()) continue;
    for (FieldSpec f : {Q, FieldSpec::prime(3)}) {
      if (!resonance_sets(c.g, c.c, f).nonresonant()) continue;
      auto forests = spanning_forests(c.g, 1000000);
      auto a = fitting_gcds_serial(c.g, c.c, f, forests);
      auto b = fitting_gcds_parallel(c.g, c.c, f, forests);
      EXPECT_EQ(strings(a), strings(b));
      ForestFitting ff = forest_fitting_h1(c.g, c.c, f);
      FlagComplex fc(c.g);
      auto h = homology_module(fc, c.c, f, 0);
      EXPECT_EQ(strings(ff.invariant_factors), strings(h.invariant_factors));
      if (f.is_rational())
        for (auto& g : ff.invariant_factors)
          for (auto& irr : factor_invariant(g)) EXPECT_LE(irr.exponent, 2);
      ++compared;
    }
  }
  EXPECT_GT(compared, 30);
}

// Removing one forest edge lowers the Phi_d multiplicity of the minor by at
// most two.
TEST(Forest, RootedMultiplicityJump) {
  std::mt19937_64 rng(32);
  int checked = 0;
  for (int it = 0; it < 60; ++it) {
    fx::Case c = fx::random_case(rng);
    if (c.g.edges().empty()) continue;
    FlagComplex fc(c.g);
    auto forests = spanning_forests(c.g, 1000000);
    auto orders = torsion_support(c.g, c.c).orders();
    orders.push_back(1);
    for (int trial = 0; trial < 5; ++trial) {
      const auto& forest = forests[rng() % forests.size()];
      if (forest.empty()) continue;
      // roots: one per tree, chosen as the smallest vertex; the new tree
      // after deleting an edge gets the endpoint not yet a root.
      auto roots_of = [&](const std::vector<int>& f) {
        std::vector<int> parent(c.g.vertex_count());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
          return parent[static_cast<std::size_t>(x)] == x ? x : find(parent[static_cast<std::size_t>(x)]);
        };
        for (int e : f) {
          int a = find(c.g.edges()[static_cast<std::size_t>(e)].u);
          int b = find(c.g.edges()[static_cast<std::size_t>(e)].v);
          parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
        std::vector<int> r;
        for (std::size_t v = 0; v < c.g.vertex_count(); ++v)
          if (find(static_cast<int>(v)) == static_cast<int>(v)) r.push_back(static_cast<int>(v));
        return r;
      };
      auto minor_of = [&](const std::vector<int>& f) {
        auto roots = roots_of(f);
        std::vector<Simplex> xb, yb;
        for (int e : f) {
          auto& ed = c.g.edges()[static_cast<std::size_t>(e)];
          xb.push_back({std::min(ed.u, ed.v), std::max(ed.u, ed.v)});
        }
        for (std::size_t v = 0; v < c.g.vertex_count(); ++v)
          if (std::find(roots.begin(), roots.end(), static_cast<int>(v)) == roots.end())
            yb.push_back({static_cast<int>(v)});
        return minor(fc, c.c, Q, 1, xb, yb);
      };
      std::vector<int> smaller = forest;
      smaller.erase(smaller.begin() + static_cast<long>(rng() % smaller.size()));
      LaurentPoly m = minor_of(forest), m2 = minor_of(smaller);
      ASSERT_FALSE(m.is_zero());
      ASSERT_FALSE(m2.is_zero());
      for (long d : orders) EXPECT_LE(mult_d(m, d), mult_d(m2, d) + 2);
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}
