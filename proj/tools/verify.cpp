#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "semicurve/semicurve.hpp"

namespace semicurve::verify {

namespace {

std::string str(bool b) { return b ? "true" : "false"; }

class Checker {
 public:
  explicit Checker(const NumericalSemigroup& s) : sgp_(to_string(s)) {}

  void expect(bool ok, const std::string& property, const std::string& ideal = "-",
              const std::string& expected = "true", const std::string& got = "false") {
    ++result_.checks;
    if (!ok) result_.failures.push_back({sgp_, ideal, property, expected, got});
  }

  template <class A, class B>
  void expect_eq(const A& expected, const B& got, const std::string& property,
                 const std::string& ideal = "-") {
    ++result_.checks;
    if (!(expected == got)) {
      result_.failures.push_back({sgp_, ideal, property, show(expected), show(got)});
    }
  }

  SemigroupResult& result() { return result_; }

 private:
  static std::string show(bool b) { return str(b); }
  static std::string show(int v) { return std::to_string(v); }
  template <class T>
  static std::string show(const T& v) { return to_string(v); }

  std::string sgp_;
  SemigroupResult result_;
};

void semigroup_level(const NumericalSemigroup& s, Checker& c) {
  const auto inv = invariants(s);
  const bool sym = is_symmetric(s);
  c.expect_eq(sym, inv.type == 1, "type 1 iff symmetric");
  bool pairing = true;
  for (int z = 0; z <= s.frobenius(); ++z) {
    if (s.contains(z) == s.contains(s.frobenius() - z)) pairing = false;
  }
  c.expect_eq(sym, pairing, "symmetric iff z <-> F-z pairing");
  c.expect_eq(s, NumericalSemigroup::from_generators(s.minimal_generators()),
              "from_generators idempotent");

  const auto ring = RelativeIdeal::whole_ring(s);
  const auto m = maximal_ideal(s);
  const auto cond = conductor_ideal(s);
  const auto nat = normalization_ideal(s);
  const auto canon = canonical_ideal(s);

  c.expect(is_reflexive(m), "maximal ideal reflexive");
  c.expect_eq(NumericalSemigroup::natural(), endomorphism_semigroup(cond), "End(C) = N");
  c.expect(is_reflexive(cond), "conductor reflexive");
  c.expect_eq(nat, dual(cond), "dual(C) = N");

  const bool one_step = is_one_step_normal(s);
  const auto chain = normalization_chain(s);
  c.expect_eq(one_step, endomorphism_semigroup(m).is_natural(), "1-step: m in C iff End(m) = N");
  c.expect_eq(one_step, max_ideal_isom_normalization(s), "1-step: m in C iff m ~ N");
  c.expect_eq(one_step, chain.length <= 1, "1-step iff chain length <= 1");
  c.expect(!one_step || is_nearly_gorenstein(s), "1-step implies nearly Gorenstein");
  c.expect(!one_step || max_ideal_selfdual(s), "1-step implies m ~ m*");

  c.expect_eq(sym, canon == ring, "Gorenstein iff K = S");
  c.expect_eq(sym, trace(canon) == ring, "Gorenstein iff tr(K) = S");
  c.expect_eq(is_almost_gorenstein(s), is_almost_symmetric_by_type(s),
              "almost Gorenstein: containment vs type formula");
  c.expect(!sym || is_nearly_gorenstein(s), "Gorenstein implies nearly Gorenstein");
  c.expect(!sym || is_almost_gorenstein(s), "Gorenstein implies almost Gorenstein");
  c.expect(!is_almost_gorenstein(s) || is_nearly_gorenstein(s),
           "almost Gorenstein implies nearly Gorenstein");

  c.expect_eq(s.multiplicity() == 2, ade_class(s).kind == AdeKind::A2n, "mult 2 iff A2n");

  // Chains.
  c.expect(chain.length <= s.genus(), "chain length <= genus");
  for (std::size_t i = 0; i + 1 < chain.rings.size(); ++i) {
    c.expect(chain.rings[i + 1].genus() < chain.rings[i].genus(), "chain genus strictly drops");
    c.expect(chain.rings[i + 1].contains_semigroup(chain.rings[i]), "chain rings nested");
  }
  c.expect(chain.rings.back().is_natural(), "chain ends at N");
  c.expect_eq(std::max(chain.length, 1), chain.leuschke_bound, "leuschke bound = max(l,1)");
  for (const auto& comp : chain.chain_module.components()) {
    c.expect(minkowski_sum(ring, comp) == comp, "chain module component is an S-ideal");
  }
  const auto cchain = normalization_chain(s, TestIdealStrategy::conductor());
  c.expect(cchain.length <= 1, "conductor chain length <= 1");

  // Extensions.
  const auto overs = oversemigroups(s);
  c.expect(overs.front() == s, "oversemigroup bottom is S");
  c.expect(overs.back().is_natural(), "oversemigroup top is N");
  c.expect_eq(ring, relative_conductor(s, s), "C_{S/S} = S");
  c.expect_eq(cond, relative_conductor(s, NumericalSemigroup::natural()), "C_{N/S} = C");
  std::vector<RelativeIdeal> conductors;
  for (const auto& t : overs) {
    const auto rec = verify_extension(s, t);
    const auto tname = to_string(t);
    c.expect(rec.trace_equals_conductor(), "tr(T) = C_{T/S}", tname);
    c.expect(rec.endo_roundtrip_ok(), "reflexive T: End(C_{T/S}) = T", tname);
    c.expect(is_module_over(rec.relative_conductor, t), "C_{T/S} is a T-ideal", tname);
    c.expect(rec.relative_conductor.is_subset_of(ring), "C_{T/S} inside S", tname);
    conductors.push_back(rec.relative_conductor);
  }
  for (std::size_t i = 0; i < overs.size(); ++i) {
    for (std::size_t j = 0; j < overs.size(); ++j) {
      if (i == j || !overs[j].contains_semigroup(overs[i])) continue;
      c.expect(conductors[j].is_subset_of(conductors[i]), "T' in T'' => C'' in C'",
               to_string(overs[i]) + " in " + to_string(overs[j]));
    }
  }
  const auto inj = conductor_injectivity_check(s);
  c.expect(inj.holds(), "Gorenstein: distinct extensions have non-isomorphic conductors");
}

void ideal_level(const NumericalSemigroup& s, Checker& c) {
  const auto ring = RelativeIdeal::whole_ring(s);
  const auto ideals = enumerate_normalized_ideals(s);
  const auto overs = oversemigroups(s);
  const bool mult_two = s.multiplicity() == 2;
  c.result().ideals = ideals.size();

  std::vector<RelativeIdeal> duals;
  duals.reserve(ideals.size());
  for (const auto& e : ideals) {
    const auto name = to_string(e);
    const auto d = dual(e);
    const auto dd = dual(d);
    duals.push_back(d);
    c.expect(e.is_subset_of(dd), "E in E**", name);
    c.expect_eq(d, dual(dd), "E* = E***", name);
    c.expect_eq(dd, bidual(dd), "E**** = E**", name);
    c.expect(is_reflexive(d), "duals are reflexive", name);

    const bool refl = is_reflexive(e);
    const auto tr = trace(e);
    if (refl) {
      c.expect_eq(tr, trace(d), "reflexive: tr(E) = tr(E*)", name);
      c.expect_eq(endomorphism_semigroup(e), endomorphism_semigroup(d),
                  "reflexive: End(E) = End(E*)", name);
    }
    c.expect_eq(tr == ring, is_isomorphic(e, ring).has_value(), "tr(E) = S iff E ~ S", name);
    c.expect(tr.is_subset_of(ring), "tr(E) in S", name);
    c.expect_eq(tr, trace(tr), "tr(tr(E)) = tr(E)", name);
    c.expect_eq(e, RelativeIdeal::from_generators(s, minimal_ideal_generators(e)),
                "minimal generators regenerate E", name);
    if (mult_two) {
      c.expect(is_isomorphic(e, d).has_value(), "multiplicity 2: E ~ E*", name);
    }

    for (const auto& t : overs) {
      const auto crit = conductor_criterion(e, t);
      const auto where = name + " vs " + to_string(t);
      if (refl) {
        c.expect_eq(crit.trace_in_conductor, crit.is_T_module,
                    "reflexive: tr(E) in C_{T/S} iff E is a T-module", where);
      } else {
        c.expect(!crit.is_T_module || crit.trace_in_conductor,
                 "T-module implies tr(E) in C_{T/S}", where);
      }
      if (crit.trace_in_conductor) {
        c.expect(is_module_over(d, t), "tr(E) in C_{T/S} implies E* is a T-module", where);
      }
    }
  }

  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (std::size_t j = 0; j < ideals.size(); ++j) {
      if (i == j || !ideals[i].is_subset_of(ideals[j])) continue;
      c.expect(duals[j].is_subset_of(duals[i]), "E in F => F* in E*",
               to_string(ideals[i]) + " in " + to_string(ideals[j]));
    }
  }
}

}  // namespace

std::string Failure::line() const {
  return "FAIL\t" + semigroup + "\t" + ideal + "\t" + property + "\texpected=" + expected +
         "\tgot=" + got;
}

std::string Summary::text() const {
  std::ostringstream out;
  out << semigroups << " semigroups, " << ideals << " ideals, " << checks << " checks, ";
  if (ok()) {
    out << "all properties hold";
  } else {
    out << failures.size() << " failures";
  }
  return out.str();
}

SemigroupResult verify_semigroup(const NumericalSemigroup& s) {
  Checker c(s);
  semigroup_level(s, c);
  ideal_level(s, c);
  return std::move(c.result());
}

Summary verify_universe(int max_genus, int jobs, int genus_cap) {
  const auto universe = enumerate_semigroups(max_genus, genus_cap);
  std::vector<SemigroupResult> results(universe.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < universe.size(); i = next++) {
      results[i] = verify_semigroup(universe[i]);
    }
  };
  jobs = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Summary summary;
  summary.semigroups = universe.size();
  for (auto& r : results) {
    summary.ideals += r.ideals;
    summary.checks += r.checks;
    for (auto& f : r.failures) summary.failures.push_back(std::move(f));
  }
  return summary;
}

}  // namespace semicurve::verify
