#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "artin/flag_complex.hpp"
#include "support.hpp"

using namespace artin;

namespace {
const FieldSpec Q = FieldSpec::rationals();

bool is_zero(const IntMatrix& m) {
  for (auto& r : m)
    for (long x : r)
      if (x != 0) return false;
  return true;
}
}  // namespace

TEST(FlagComplex, Counts) {
  FlagComplex sq(fx::square().g);
  EXPECT_EQ(sq.f_vector(), (std::vector<long>{1, 4, 4}));
  FlagComplex rs(fx::square_diagonal(false).g);
  EXPECT_EQ(rs.f_vector(), (std::vector<long>{1, 4, 5, 2}));
  EXPECT_GE(rs.index({0, 1, 2}), 0);
  EXPECT_GE(rs.index({0, 2, 3}), 0);
  EXPECT_EQ(rs.dimension(), 2);
  LabeledGraph one;
  one.add_vertex("x");
  EXPECT_EQ(FlagComplex(one).f_vector(), (std::vector<long>{1, 1}));
  // a non-spherical triangle contributes no 2-simplex
  fx::Case bad = fx::make_case({1, 1, 1}, {{0, 1, 4}, {1, 2, 4}, {0, 2, 2}});
  EXPECT_EQ(FlagComplex(bad.g).f_vector(), (std::vector<long>{1, 3, 3}));
}

TEST(FlagComplex, EdgeBoundarySigns) {
  FlagComplex fc(fx::dihedral().g);
  IncidenceMatrix b = boundary_matrix(fc, 1);
  ASSERT_EQ(b.rows, 2u);
  ASSERT_EQ(b.cols, 1u);
  EXPECT_EQ(b.entries[static_cast<std::size_t>(fc.index({1}))][0], 1);
  EXPECT_EQ(b.entries[static_cast<std::size_t>(fc.index({0}))][0], -1);
  IncidenceMatrix aug = boundary_matrix(fc, 0);
  EXPECT_EQ(aug.entries, (IntMatrix{{1, 1}}));
}

TEST(FlagComplex, RanksOnExamples) {
  FlagComplex sq(fx::square().g);
  EXPECT_EQ(reduced_homology_ranks(sq, Q), (std::vector<long>{0, 1}));
  auto im = image_dims(sq, Q);
  EXPECT_EQ(im[1], 3);
  EXPECT_EQ(im[2], 0);
  EXPECT_EQ(reduced_homology_ranks(FlagComplex(fx::dihedral().g), Q), (std::vector<long>{0, 0}));
  fx::Case two = fx::make_case({1, 1}, {});
  EXPECT_EQ(reduced_homology_ranks(FlagComplex(two.g), Q), (std::vector<long>{1}));
}

TEST(FlagComplex, RandomInvariants) {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 150; ++it) {
    fx::Case c = fx::random_case(rng);
    FlagComplex fc(c.g);
    for (int k = -1; k <= fc.dimension(); ++k)
      for (auto& x : fc.simplices(k)) {
        EXPECT_TRUE(std::is_sorted(x.begin(), x.end()));
        EXPECT_TRUE(x.empty() || is_spherical(c.g, x));
        for (std::size_t i = 0; i < x.size(); ++i) EXPECT_GE(fc.index(facet(x, i)), 0);
      }
    for (int k = 0; k <= fc.dimension(); ++k) {
      IncidenceMatrix a = boundary_matrix(fc, k), b = boundary_matrix(fc, k + 1);
      EXPECT_TRUE(is_zero(multiply(a.entries, b.entries, a.cols, b.cols)));
    }
    // rank-nullity in each degree of the augmented complex
    for (FieldSpec f : {Q, FieldSpec::prime(2), FieldSpec::prime(3)}) {
      auto im = image_dims(fc, f);
      auto r = reduced_homology_ranks(fc, f);
      long euler = 0, betti = 0;
      for (int k = -1; k <= fc.dimension(); ++k)
        euler += (k % 2 == 0 ? 1 : -1) * static_cast<long>(fc.count(k));
      for (int k = 0; k <= fc.dimension(); ++k) {
        long expect = static_cast<long>(fc.count(k)) - im[static_cast<std::size_t>(k)] -
                      im[static_cast<std::size_t>(k + 1)];
        EXPECT_EQ(r[static_cast<std::size_t>(k)], expect);
        betti += (k % 2 == 0 ? 1 : -1) * r[static_cast<std::size_t>(k)];
      }
      EXPECT_EQ(euler, betti);
    }
  }
}

TEST(FlagComplex, PermutationInvariance) {
  std::mt19937_64 rng(6);
  for (int it = 0; it < 60; ++it) {
    fx::Case c = fx::random_case(rng);
    std::vector<int> perm(c.g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    LabeledGraph h;
    for (int v : perm) h.add_vertex(c.g.name(v));
    std::vector<int> where(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) where[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    for (auto& e : c.g.edges())
      h.add_edge(where[static_cast<std::size_t>(e.u)], where[static_cast<std::size_t>(e.v)], e.label);
    FlagComplex a(c.g), b(h);
    EXPECT_EQ(a.f_vector(), b.f_vector());
    EXPECT_EQ(reduced_homology_ranks(a, Q), reduced_homology_ranks(b, Q));
    EXPECT_EQ(image_dims(a, Q), image_dims(b, Q));
  }
}
