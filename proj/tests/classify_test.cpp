#include <gtest/gtest.h>

#include "support.hpp"

namespace {

using namespace semicurve;
using testing_support::oracle_of;

NumericalSemigroup sg(std::initializer_list<int> gens) {
  return NumericalSemigroup::from_generators(gens);
}

TEST(OneStepNormal, Examples) {
  EXPECT_TRUE(is_one_step_normal(NumericalSemigroup::natural()));
  EXPECT_FALSE(is_one_step_normal(sg({3, 5, 7})));
  EXPECT_TRUE(is_one_step_normal(sg({5, 6, 7, 8, 9})));
  EXPECT_TRUE(is_one_step_normal(sg({2, 3})));
}

TEST(OneStepNormal, FiveSixSevenIsNot) {
  const auto s = sg({5, 6, 7});
  EXPECT_FALSE(is_one_step_normal(s));
  EXPECT_EQ(endomorphism_semigroup(maximal_ideal(s)), sg({5, 6, 7, 8, 9}));

  // Independent computation: End(m) = m - m over a wide window.
  const oracle::Window w{-20, 60};
  const auto o = oracle_of(s);
  const auto m = oracle::IntSet::build(w.lo, w.hi, [&](int z) { return z != 0 && o.contains(z); });
  EXPECT_EQ(oracle::endomorphism_gaps(m, w), (std::vector<int>{1, 2, 3, 4}));
  // m is not inside the conductor [10, inf).
  EXPECT_EQ(s.conductor(), 10);
  EXPECT_TRUE(m.contains(5));
}

TEST(NearlyGorenstein, Examples) {
  EXPECT_TRUE(is_nearly_gorenstein(sg({3, 5, 7})));
  EXPECT_TRUE(is_nearly_gorenstein(sg({2, 3})));
  EXPECT_TRUE(is_nearly_gorenstein(NumericalSemigroup::natural()));
}

TEST(AlmostGorenstein, Examples) {
  EXPECT_TRUE(is_almost_gorenstein(sg({3, 5, 7})));
  EXPECT_TRUE(is_almost_gorenstein(sg({2, 3})));
  const auto s = sg({4, 6, 7, 9});
  EXPECT_EQ(is_almost_gorenstein(s), is_almost_symmetric_by_type(s));
}

TEST(MaxIdeal, SelfDualFamily) {
  for (int n = 1; n <= 8; ++n) {
    const auto s = sg({2, 2 * n + 1});
    EXPECT_TRUE(max_ideal_selfdual(s)) << n;
    EXPECT_EQ(is_one_step_normal(s), n == 1) << n;
  }
  EXPECT_TRUE(max_ideal_selfdual(sg({5, 6, 7, 8, 9})));
  EXPECT_TRUE(max_ideal_isom_normalization(sg({5, 6, 7, 8, 9})));
  EXPECT_TRUE(max_ideal_selfdual(NumericalSemigroup::natural()));
  EXPECT_TRUE(max_ideal_isom_normalization(NumericalSemigroup::natural()));
}

TEST(Ade, Examples) {
  EXPECT_EQ(ade_class(NumericalSemigroup::natural()).kind, AdeKind::Regular);
  EXPECT_EQ(ade_class(sg({2, 5})), (AdeClass{AdeKind::A2n, 2}));
  EXPECT_EQ(to_string(ade_class(sg({2, 5}))), "A4");
  EXPECT_EQ(ade_class(sg({3, 4})).kind, AdeKind::E6);
  EXPECT_EQ(ade_class(sg({3, 5})).kind, AdeKind::E8);
  EXPECT_EQ(ade_class(sg({4, 5})).kind, AdeKind::Other);
  EXPECT_EQ(ade_class(sg({3, 5, 7})).kind, AdeKind::Other);
}

TEST(GlobalSpectrum, Examples) {
  const auto n = global_spectrum_facts(NumericalSemigroup::natural());
  EXPECT_TRUE(n.one_in_gs);
  EXPECT_FALSE(n.two_in_gs);
  EXPECT_FALSE(n.three_in_gs);
  EXPECT_EQ(n.exact, "{1}");

  const auto a6 = global_spectrum_facts(sg({2, 7}));
  EXPECT_TRUE(a6.one_in_gs && a6.two_in_gs);
  EXPECT_FALSE(a6.three_in_gs);
  EXPECT_EQ(a6.exact, "{1,2}");

  const auto e6 = global_spectrum_facts(sg({3, 4}));
  EXPECT_TRUE(e6.one_in_gs && e6.two_in_gs && e6.three_in_gs);
  EXPECT_EQ(e6.beyond, "unknown");
  EXPECT_TRUE(e6.exact.empty());
}

TEST(Classify, ReportMatchesPredicates) {
  const auto r = classify(sg({3, 5, 7}));
  EXPECT_FALSE(r.is_regular);
  EXPECT_FALSE(r.is_gorenstein);
  EXPECT_TRUE(r.is_nearly_gorenstein);
  EXPECT_TRUE(r.is_almost_gorenstein);
  EXPECT_FALSE(r.is_one_step_normal);
  EXPECT_EQ(r.end_of_max_ideal, sg({2, 3}));
  EXPECT_EQ(r.ade_class.kind, AdeKind::Other);
}

TEST(Classify, PropertiesOverGenusEight) {
  bool strict_nearly_witness = false;
  bool selfdual_witness = false;
  for (const auto& s : enumerate_semigroups(8)) {
    SCOPED_TRACE(to_string(s));
    const auto r = classify(s);
    const bool end_is_n = endomorphism_semigroup(maximal_ideal(s)).is_natural();
    const auto chain = normalization_chain(s);

    EXPECT_EQ(r.is_one_step_normal, end_is_n);
    EXPECT_EQ(r.is_one_step_normal, r.max_ideal_isom_normalization);
    EXPECT_EQ(r.is_one_step_normal, chain.length <= 1);
    EXPECT_EQ(r.is_one_step_normal, maximal_ideal(s).is_subset_of(conductor_ideal(s)));
    if (r.is_regular) EXPECT_TRUE(r.is_one_step_normal);
    if (r.is_one_step_normal) {
      EXPECT_TRUE(r.is_nearly_gorenstein);
      EXPECT_TRUE(r.max_ideal_selfdual);
    }
    if (r.is_gorenstein) {
      EXPECT_TRUE(r.is_nearly_gorenstein);
      EXPECT_TRUE(r.is_almost_gorenstein);
    }
    strict_nearly_witness |= r.is_nearly_gorenstein && !r.is_one_step_normal;
    selfdual_witness |= r.max_ideal_selfdual && !r.is_one_step_normal;

    const auto ring = RelativeIdeal::whole_ring(s);
    const auto k = canonical_ideal(s);
    EXPECT_EQ(r.is_gorenstein, k == ring);
    EXPECT_EQ(r.is_gorenstein, trace(k) == ring);
    EXPECT_EQ(r.is_almost_gorenstein, is_almost_symmetric_by_type(s));

    EXPECT_EQ(s.multiplicity() == 2, r.ade_class.kind == AdeKind::A2n);
    if (r.ade_class.kind == AdeKind::A2n) {
      for (const auto& e : enumerate_normalized_ideals(s)) {
        EXPECT_TRUE(is_isomorphic(e, dual(e)).has_value()) << to_string(e);
      }
    }

    EXPECT_TRUE(r.gs_facts.one_in_gs);
    EXPECT_EQ(r.gs_facts.two_in_gs, !s.is_natural());
    EXPECT_EQ(r.gs_facts.three_in_gs, !s.is_natural() && r.ade_class.kind != AdeKind::A2n);
  }
  EXPECT_TRUE(strict_nearly_witness);
  EXPECT_TRUE(selfdual_witness);
  const auto s25 = classify(sg({2, 5}));
  EXPECT_TRUE(s25.max_ideal_selfdual);
  EXPECT_FALSE(s25.is_one_step_normal);
}

}  // namespace
