#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "semicurve/error.hpp"
#include "semicurve/semigroup.hpp"

namespace {

using semicurve::NumericalSemigroup;
using ::testing::ElementsAre;

TEST(FromGenerators, ThreeFiveSeven) {
  const auto s = NumericalSemigroup::from_generators({3, 5, 7});
  // Sieve of all sums up to 2 * max(gens).
  const auto in = oracle::sieve({3, 5, 7}, 14);
  std::vector<int> expected_gaps;
  for (int n = 1; n < 14; ++n) {
    if (!in[n]) expected_gaps.push_back(n);
  }
  EXPECT_EQ(s.gaps(), expected_gaps);
  EXPECT_EQ(s.gaps(), (std::vector<int>{1, 2, 4}));
  EXPECT_EQ(s.frobenius(), 4);
  EXPECT_EQ(s.conductor(), 5);
  EXPECT_EQ(s.minimal_generators(), (std::vector<int>{3, 5, 7}));
}

TEST(FromGenerators, OneIsNatural) {
  const auto s = NumericalSemigroup::from_generators({1});
  EXPECT_TRUE(s.gaps().empty());
  EXPECT_EQ(s.frobenius(), -1);
  EXPECT_TRUE(s.is_natural());
  EXPECT_EQ(s, NumericalSemigroup::natural());
  EXPECT_EQ(s.minimal_generators(), (std::vector<int>{1}));
}

TEST(FromGenerators, DropsRedundantGenerators) {
  const auto s = NumericalSemigroup::from_generators({2, 3, 4});
  EXPECT_EQ(s.minimal_generators(), (std::vector<int>{2, 3}));
  EXPECT_EQ(s.gaps(), (std::vector<int>{1}));
}

TEST(FromGenerators, RejectsNonCoprime) {
  EXPECT_THROW(NumericalSemigroup::from_generators({4, 6}), semicurve::NotNumerical);
  EXPECT_THROW(NumericalSemigroup::from_generators({}), std::invalid_argument);
  EXPECT_THROW(NumericalSemigroup::from_generators({0, 1}), std::invalid_argument);
}

TEST(FromGaps, RejectsNonClosedComplement) {
  // 2 in S but 4 a gap.
  EXPECT_THROW(NumericalSemigroup::from_gaps(std::vector<int>{1, 3, 4}),
               semicurve::NotASemigroup);
  EXPECT_EQ(NumericalSemigroup::from_gaps(std::vector<int>{1, 2, 4}),
            NumericalSemigroup::from_generators({3, 5, 7}));
}

TEST(Contains, Examples) {
  const auto s = NumericalSemigroup::from_generators({3, 5, 7});
  EXPECT_FALSE(s.contains(4));
  EXPECT_TRUE(s.contains(8));
  EXPECT_FALSE(s.contains(-1));
  EXPECT_TRUE(s.contains(0));
  EXPECT_TRUE(NumericalSemigroup::natural().contains(0));
  EXPECT_FALSE(NumericalSemigroup::natural().contains(-3));
  for (int n = s.conductor(); n < s.conductor() + 50; ++n) EXPECT_TRUE(s.contains(n));
}

TEST(Invariants, ThreeFiveSeven) {
  const auto inv = semicurve::invariants(NumericalSemigroup::from_generators({3, 5, 7}));
  EXPECT_EQ(inv.multiplicity, 3);
  EXPECT_EQ(inv.embedding_dimension, 3);
  EXPECT_EQ(inv.genus, 3);
  EXPECT_EQ(inv.frobenius, 4);
  EXPECT_EQ(inv.apery_set, (std::vector<int>{0, 5, 7}));
  EXPECT_EQ(inv.pseudo_frobenius, (std::vector<int>{2, 4}));
  EXPECT_EQ(inv.type, 2);
}

TEST(Invariants, Natural) {
  const auto inv = semicurve::invariants(NumericalSemigroup::natural());
  EXPECT_EQ(inv.multiplicity, 1);
  EXPECT_EQ(inv.embedding_dimension, 1);
  EXPECT_EQ(inv.genus, 0);
  EXPECT_EQ(inv.frobenius, -1);
  EXPECT_EQ(inv.type, 1);
}

TEST(Invariants, Cusp) {
  const auto inv = semicurve::invariants(NumericalSemigroup::from_generators({2, 3}));
  EXPECT_EQ(inv.genus, 1);
  EXPECT_EQ(inv.frobenius, 1);
  EXPECT_EQ(inv.pseudo_frobenius, (std::vector<int>{1}));
  EXPECT_EQ(inv.type, 1);
}

TEST(Symmetric, Examples) {
  EXPECT_TRUE(semicurve::is_symmetric(NumericalSemigroup::from_generators({2, 3})));
  EXPECT_FALSE(semicurve::is_symmetric(NumericalSemigroup::from_generators({3, 5, 7})));
  EXPECT_TRUE(semicurve::is_symmetric(NumericalSemigroup::natural()));
}

TEST(Enumerate, SmallGenera) {
  const auto g0 = semicurve::enumerate_semigroups(0);
  ASSERT_EQ(g0.size(), 1u);
  EXPECT_TRUE(g0.front().is_natural());

  const auto g2 = semicurve::enumerate_semigroups(2);
  ASSERT_EQ(g2.size(), 4u);
  EXPECT_EQ(g2[0], NumericalSemigroup::natural());
  EXPECT_EQ(g2[1], NumericalSemigroup::from_generators({2, 3}));
  // Sorted by gap set within a genus: {1,2} < {1,3}.
  EXPECT_EQ(g2[2], NumericalSemigroup::from_generators({3, 4, 5}));
  EXPECT_EQ(g2[3], NumericalSemigroup::from_generators({2, 5}));

  EXPECT_EQ(semicurve::enumerate_semigroups(5).size(), 27u);
  EXPECT_THAT(semicurve::count_by_genus(5), ElementsAre(1, 1, 2, 4, 7, 12));
}

TEST(Enumerate, AgreesWithBruteForce) {
  for (int g = 0; g <= 6; ++g) {
    std::set<std::vector<int>> tree;
    semicurve::for_each_semigroup(g, [&](const NumericalSemigroup& s) {
      EXPECT_TRUE(tree.insert(s.gaps()).second) << "duplicate " << to_string(s);
    });
    EXPECT_EQ(tree, oracle::all_semigroup_gap_sets(g)) << "genus " << g;
  }
}

TEST(Enumerate, GenusCap) {
  EXPECT_THROW(semicurve::enumerate_semigroups(21), semicurve::GenusCapExceeded);
  EXPECT_THROW(semicurve::enumerate_semigroups(5, 4), semicurve::GenusCapExceeded);
  EXPECT_THROW(semicurve::enumerate_semigroups(-1), std::invalid_argument);
  EXPECT_EQ(semicurve::count_by_genus(3, 3).size(), 4u);
}

TEST(Enumerate, SubtreesPartitionTheUniverse) {
  std::size_t total = 1;
  for (const auto& child : semicurve::tree_children(NumericalSemigroup::natural())) {
    semicurve::for_each_descendant(child, 7, [&](const NumericalSemigroup&) { ++total; });
  }
  EXPECT_EQ(total, semicurve::enumerate_semigroups(7).size());
}

TEST(Properties, OverGenusEightUniverse) {
  for (const auto& s : semicurve::enumerate_semigroups(8)) {
    SCOPED_TRACE(to_string(s));
    EXPECT_EQ(NumericalSemigroup::from_generators(s.minimal_generators()), s);
    const auto inv = semicurve::invariants(s);
    EXPECT_EQ(inv.type == 1, semicurve::is_symmetric(s));
    for (int z = 0; z <= s.frobenius(); ++z) {
      if (semicurve::is_symmetric(s)) {
        EXPECT_NE(s.contains(z), s.contains(s.frobenius() - z)) << z;
      }
    }
    for (int a : s.elements_below(s.conductor())) {
      for (int b : s.elements_below(s.conductor())) EXPECT_TRUE(s.contains(a + b));
    }
    // Apery elements are minimal in their residue class.
    for (int w : inv.apery_set) {
      EXPECT_TRUE(s.contains(w));
      if (w >= inv.multiplicity) EXPECT_FALSE(s.contains(w - inv.multiplicity));
    }
  }
}

}  // namespace
