#include "semicurve/chain.hpp"

#include <algorithm>

namespace semicurve {

std::string to_string(const TestIdealStrategy& s) {
  switch (s.kind) {
    case TestIdealStrategy::Kind::MaximalIdeal:
      return "maximal";
    case TestIdealStrategy::Kind::Conductor:
      return "conductor";
    case TestIdealStrategy::Kind::Custom: {
      std::string out = "ideal:";
      for (std::size_t i = 0; i < s.generators.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.generators[i]);
      }
      return out;
    }
  }
  return {};
}

RelativeIdeal test_ideal(const NumericalSemigroup& ring,
                         const TestIdealStrategy& strategy) {
  switch (strategy.kind) {
    case TestIdealStrategy::Kind::MaximalIdeal:
      return maximal_ideal(ring);
    case TestIdealStrategy::Kind::Conductor:
      return conductor_ideal(ring);
    case TestIdealStrategy::Kind::Custom:
      return RelativeIdeal::from_generators(ring, strategy.generators);
  }
  return maximal_ideal(ring);
}

int leuschke_bound(const ChainReport& report) noexcept {
  return std::max(report.length, 1);
}

namespace {

ChainReport finish(const TestIdealStrategy& strategy,
                   std::vector<NumericalSemigroup> rings,
                   std::vector<RelativeIdeal> ideals) {
  std::vector<RelativeIdeal> components;
  components.reserve(rings.size());
  for (const auto& r : rings) {
    components.push_back(RelativeIdeal::of_overring(rings.front(), r));
  }
  ChainReport report{strategy, std::move(rings), std::move(ideals), 0, 1,
                     MonomialModule(std::move(components))};
  report.length = static_cast<int>(report.test_ideals.size());
  report.leuschke_bound = leuschke_bound(report);
  return report;
}

}  // namespace

ChainReport normalization_chain(const NumericalSemigroup& s,
                                const TestIdealStrategy& strategy) {
  std::vector<NumericalSemigroup> rings{s};
  std::vector<RelativeIdeal> ideals;
  while (!rings.back().is_natural()) {
    const auto& current = rings.back();
    auto ideal = test_ideal(current, strategy);
    auto next = endomorphism_semigroup(ideal);
    if (next == current) {
      const std::string what = "test ideal " + to_string(ideal) + " of " +
                               to_string(current) +
                               " has End(I) = R; the chain cannot advance";
      throw StalledChain(what, finish(strategy, std::move(rings), std::move(ideals)));
    }
    ideals.push_back(std::move(ideal));
    rings.push_back(std::move(next));
  }
  return finish(strategy, std::move(rings), std::move(ideals));
}

}  // namespace semicurve
