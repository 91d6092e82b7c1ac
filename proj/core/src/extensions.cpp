#include "semicurve/extensions.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "semicurve/error.hpp"

namespace semicurve {

std::vector<NumericalSemigroup> oversemigroups(const NumericalSemigroup& s) {
  std::set<std::vector<int>> seen{s.gaps()};
  std::vector<NumericalSemigroup> out{s};
  std::deque<NumericalSemigroup> frontier{s};
  while (!frontier.empty()) {
    const auto t = std::move(frontier.front());
    frontier.pop_front();
    for (int g : t.gaps()) {
      std::vector<int> gens = t.minimal_generators();
      gens.push_back(g);
      auto closed = NumericalSemigroup::from_generators(gens);
      if (seen.insert(closed.gaps()).second) {
        out.push_back(closed);
        frontier.push_back(std::move(closed));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.genus() != b.genus()) return a.genus() > b.genus();
    return a.gaps() < b.gaps();
  });
  return out;
}

RelativeIdeal relative_conductor(const NumericalSemigroup& s,
                                 const NumericalSemigroup& t) {
  return quotient(RelativeIdeal::whole_ring(s), RelativeIdeal::of_overring(s, t));
}

ExtensionRecord verify_extension(const NumericalSemigroup& s,
                                 const NumericalSemigroup& t) {
  const auto as_ideal = RelativeIdeal::of_overring(s, t);
  auto cond = relative_conductor(s, t);
  auto tr = trace(as_ideal);
  const bool reflexive = is_reflexive(as_ideal);
  auto endo = endomorphism_semigroup(cond);
  return ExtensionRecord{t, std::move(cond), std::move(tr), reflexive, std::move(endo)};
}

ConductorCriterion conductor_criterion(const RelativeIdeal& e,
                                       const NumericalSemigroup& t) {
  const auto cond = relative_conductor(e.ambient(), t);
  return {trace(e).is_subset_of(cond), is_module_over(e, t)};
}

ConductorInjectivityReport conductor_injectivity_check(const NumericalSemigroup& s) {
  ConductorInjectivityReport r;
  r.base = s;
  r.symmetric = is_symmetric(s);
  const auto overs = oversemigroups(s);
  r.extension_count = static_cast<int>(overs.size());
  std::vector<RelativeIdeal> conductors;
  conductors.reserve(overs.size());
  for (const auto& t : overs) conductors.push_back(relative_conductor(s, t));
  for (std::size_t i = 0; i < overs.size(); ++i) {
    for (std::size_t j = i + 1; j < overs.size(); ++j) {
      ++r.pairs_checked;
      if (is_isomorphic(conductors[i], conductors[j])) {
        r.isomorphic_pairs.emplace_back(overs[i], overs[j]);
      }
    }
  }
  return r;
}

}  // namespace semicurve
