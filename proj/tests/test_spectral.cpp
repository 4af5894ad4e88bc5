#include <random>

#include <gtest/gtest.h>

#include "artin/cyclotomic.hpp"
#include "artin/error.hpp"
#include "artin/homology.hpp"
#include "artin/spectral.hpp"
#include "support.hpp"

using namespace artin;

namespace {

const FieldSpec Q = FieldSpec::rationals();

struct Solved {
  PageTable pt;
  TorsionTable tt;
};

Solved solve(const fx::Case& c, long d) {
  FlagComplex fc(c.g);
  WeightedComplex wc = weighted_complex(fc, c.c, d);
  PageTable pt = page_dims(wc, fc.dimension() + 2);
  auto r = reduced_homology_ranks(fc, Q);
  return {pt, solve_torsion(pt, r, fc.dimension())};
}

bool is_zero(const Mat<KdElement>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

Mat<KdElement> product(const Mat<KdElement>& a, const Mat<KdElement>& b) {
  Mat<KdElement> out(a.context(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

}  // namespace

TEST(Weights, SquareExamples) {
  fx::Case s = fx::square();
  FlagComplex fc(s.g);
  WeightedComplex w6 = weighted_complex(fc, s.c, 6);
  WeightedComplex w2 = weighted_complex(fc, s.c, 2);
  auto edge = [&](int u, int v) { return static_cast<std::size_t>(fc.index({u, v})); };
  for (std::size_t v = 0; v < 4; ++v) EXPECT_EQ(w6.weight(0, v), 0);
  EXPECT_EQ(w6.weight(1, edge(0, 1)), 1);
  EXPECT_EQ(w6.weight(1, edge(1, 2)), 1);
  EXPECT_EQ(w6.weight(1, edge(2, 3)), 1);
  EXPECT_EQ(w6.weight(1, edge(0, 3)), 0);
  std::vector<int> vw;
  for (std::size_t v = 0; v < 4; ++v) vw.push_back(w2.weight(0, v));
  EXPECT_EQ(vw, (std::vector<int>{0, 1, 0, 1}));
  EXPECT_EQ(w2.weight(1, edge(0, 1)), 2);
  EXPECT_EQ(w2.weight(1, edge(2, 3)), 2);
  EXPECT_EQ(w2.weight(1, edge(0, 3)), 1);
  EXPECT_EQ(w2.weight(-1, 0), 0);
}

TEST(Pages, SquareD2) {
  Solved s = solve(fx::square(), 2);
  const PageTable& pt = s.pt;
  EXPECT_EQ(pt.h(1, 0, 0), 1);
  EXPECT_EQ(pt.h(1, 1, -1), 1);
  EXPECT_EQ(pt.h(2, 0, 0), 1);
  EXPECT_EQ(pt.h(1, 2, -1), 3);
  EXPECT_EQ(pt.h(2, 2, -1), 2);
  EXPECT_EQ(pt.h(3, 2, -1), 1);
  EXPECT_EQ(pt.h_inf(2, -1), 1);
  EXPECT_TRUE(pt.routes_agree());
  EXPECT_EQ(s.tt.at(0, 1), 1);
  EXPECT_EQ(s.tt.at(0, 2), 1);
  for (int j = 1; j <= 3; ++j) EXPECT_EQ(s.tt.at(1, j), 0);
}

TEST(Pages, SquareD6) {
  Solved s = solve(fx::square(), 6);
  const PageTable& pt = s.pt;
  EXPECT_EQ(pt.h(1, 0, 0), 2);
  EXPECT_EQ(pt.h(1, 1, 0), 3);
  // the only entry beyond the stable page is h^1_(0,0)
  for (int r = 1; r <= pt.last_page(); ++r)
    for (auto& [pq, h] : pt.pages[static_cast<std::size_t>(r)]) {
      long excess = h - pt.h_inf(pq.first, pq.second);
      if (r == 1 && pq == Bidegree{0, 0}) EXPECT_EQ(excess, 2);
      else if (r == 1 && pq == Bidegree{1, 0}) EXPECT_EQ(excess, 2);  // pairs with (0,0)
      else EXPECT_EQ(excess, 0) << r << " " << pq.first << "," << pq.second;
    }
  EXPECT_EQ(pt.h(2, 1, 0), 1);
  EXPECT_EQ(s.tt.at(0, 1), 2);
  EXPECT_EQ(s.tt.at(0, 2), 0);
}

TEST(Pages, ResonantCharacterRejected) {
  fx::Case c = fx::make_case({1, 0}, {{0, 1, 2}});
  FlagComplex fc(c.g);
  EXPECT_THROW(weighted_complex(fc, c.c, 2), Error);
}

TEST(Torsion, JordanCheck) {
  TorsionTable ok;
  ok.n[0] = {1, 1};
  EXPECT_TRUE(jordan_bound_check(ok));
  TorsionTable bad;
  bad.n[0] = {0, 0, 1};
  EXPECT_FALSE(jordan_bound_check(bad));
  EXPECT_TRUE(jordan_bound_check(TorsionTable{}));
}

// Against the Smith form on random nonresonant inputs; routes, the
// untwisted model, weight bounds and graded boundaries are checked alongside.
TEST(Pages, RandomAgainstSmith) {
  std::mt19937_64 rng(22);
  int compared = 0;
  for (int it = 0; it < 60; ++it) {
    fx::Case c = fx::random_case(rng);
    FlagComplex fc(c.g);
    auto hom = homology_modules(fc, c.c, Q, fc.dimension());
    auto r = reduced_homology_ranks(fc, Q);
    for (long d : torsion_support(c.g, c.c).orders()) {
      WeightedComplex wc = weighted_complex(fc, c.c, d);
      for (int k = 0; k <= fc.dimension(); ++k)
        for (std::size_t i = 0; i < fc.count(k); ++i) {
          EXPECT_LE(wc.weight(k, i), k + 2);
          for (auto& f : wc.facets[static_cast<std::size_t>(k + 1)][i]) {
            EXPECT_GE(f.drop, 0);
            EXPECT_FALSE(f.unit.is_zero());
          }
        }
      for (auto& e : fc.simplices(1)) EXPECT_LE(mult_d(simplex_weights(fc, c.c, Q, e).product(), d), 2);
      PageTable pt = page_dims(wc, 0);
      EXPECT_TRUE(pt.routes_agree());
      EXPECT_TRUE(pt.degenerates());
      EXPECT_TRUE(stable_page_matches(pt, r));
      PageTable un = page_dims_untwisted(wc, 0);
      EXPECT_EQ(un.pages, pt.pages);
      for (int s = 1; s <= 3; ++s)
        for (int n = 1; n <= fc.dimension(); ++n)
          EXPECT_TRUE(is_zero(product(graded_boundary(wc, n, s), graded_boundary(wc, n + 1, s))));
      TorsionTable tt = solve_torsion(pt, r, fc.dimension());
      EXPECT_TRUE(jordan_bound_check(tt));
      for (int k = 0; k <= fc.dimension(); ++k) {
        auto ex = hom[static_cast<std::size_t>(k)].cyclotomic_exponents(d);
        for (int j = 1; j <= k + 4; ++j) {
          long want = ex.count(j) ? ex.at(j) : 0;
          EXPECT_EQ(tt.at(k, j), want) << "d=" << d << " k=" << k << " j=" << j;
        }
        ++compared;
      }
    }
  }
  EXPECT_GT(compared, 30);
}

// On a disconnected input the per-component tables add up to the whole.
TEST(Pages, ComponentsSum) {
  fx::Case c = fx::make_case({1, 2, 1, 3, 3},
                             {{0, 1, 4}, {1, 2, 4}, {3, 4, 6}});
  FlagComplex fc(c.g);
  auto r = reduced_homology_ranks(fc, Q);
  for (long d : torsion_support(c.g, c.c).orders()) {
    TorsionTable whole = solve_torsion(page_dims(weighted_complex(fc, c.c, d), 0), r, fc.dimension());
    std::map<std::pair<int, int>, long> sum;
    for (auto& comp : c.g.components()) {
      FlagComplex part(c.g.induced(comp));
      Character cc = c.c.restricted(comp);
      TorsionTable t = solve_torsion(page_dims(weighted_complex(part, cc, d), 0),
                                     reduced_homology_ranks(part, Q), part.dimension());
      for (auto& [k, v] : t.n)
        for (std::size_t j = 0; j < v.size(); ++j) sum[{k, static_cast<int>(j) + 1}] += v[j];
    }
    for (int k = 0; k <= fc.dimension(); ++k)
      for (int j = 1; j <= k + 2; ++j) {
        long s = sum.count({k, j}) ? sum[{k, j}] : 0;
        EXPECT_EQ(whole.at(k, j), s) << d << " " << k << " " << j;
      }
  }
}
