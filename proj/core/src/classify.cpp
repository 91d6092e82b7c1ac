#include "semicurve/classify.hpp"

namespace semicurve {

std::string to_string(const AdeClass& c) {
  switch (c.kind) {
    case AdeKind::Regular:
      return "Regular";
    case AdeKind::A2n:
      return "A" + std::to_string(2 * c.n);
    case AdeKind::E6:
      return "E6";
    case AdeKind::E8:
      return "E8";
    case AdeKind::Other:
      return "Other";
  }
  return "Other";
}

bool is_one_step_normal(const NumericalSemigroup& s) {
  return maximal_ideal(s).is_subset_of(conductor_ideal(s));
}

bool is_gorenstein(const NumericalSemigroup& s) { return is_symmetric(s); }

bool is_nearly_gorenstein(const NumericalSemigroup& s) {
  return maximal_ideal(s).is_subset_of(trace(canonical_ideal(s)));
}

bool is_almost_gorenstein(const NumericalSemigroup& s) {
  const auto m = maximal_ideal(s);
  return minkowski_sum(m, canonical_ideal(s)).is_subset_of(m);
}

bool is_almost_symmetric_by_type(const NumericalSemigroup& s) {
  const int type = static_cast<int>(pseudo_frobenius(s).size());
  return 2 * s.genus() == s.conductor() + type - 1;
}

bool max_ideal_selfdual(const NumericalSemigroup& s) {
  const auto m = maximal_ideal(s);
  return is_isomorphic(m, dual(m)).has_value();
}

bool max_ideal_isom_normalization(const NumericalSemigroup& s) {
  return is_isomorphic(maximal_ideal(s), normalization_ideal(s)).has_value();
}

AdeClass ade_class(const NumericalSemigroup& s) {
  if (s.is_natural()) return {AdeKind::Regular, 0};
  const auto& g = s.minimal_generators();
  if (g.size() != 2) return {AdeKind::Other, 0};
  if (g[0] == 2) return {AdeKind::A2n, (g[1] - 1) / 2};
  if (g[0] == 3 && g[1] == 4) return {AdeKind::E6, 0};
  if (g[0] == 3 && g[1] == 5) return {AdeKind::E8, 0};
  return {AdeKind::Other, 0};
}

GlobalSpectrumFacts global_spectrum_facts(const NumericalSemigroup& s) {
  GlobalSpectrumFacts f;
  f.one_in_gs = true;
  if (s.is_natural()) {
    f.exact = "{1}";
    f.note = "regular: End(M) is a matrix ring over R for every CM module";
    return f;
  }
  const auto ade = ade_class(s);
  f.two_in_gs = true;
  f.three_in_gs = ade.kind != AdeKind::A2n;
  if (ade.kind == AdeKind::A2n) {
    f.exact = "{1,2}";
    f.note = "A_{2n} branch: 3 is not in gs";
  } else {
    f.note = "non-regular, not A_{2n}: 3 is in gs";
  }
  f.note += "; A1 (the node) is reducible and not a monomial branch";
  return f;
}

ClassificationReport classify(const NumericalSemigroup& s) {
  ClassificationReport r;
  r.semigroup = s;
  r.is_regular = s.is_natural();
  r.is_gorenstein = is_gorenstein(s);
  r.is_nearly_gorenstein = is_nearly_gorenstein(s);
  r.is_almost_gorenstein = is_almost_gorenstein(s);
  r.is_one_step_normal = is_one_step_normal(s);
  r.max_ideal_selfdual = max_ideal_selfdual(s);
  r.max_ideal_isom_normalization = max_ideal_isom_normalization(s);
  r.ade_class = ade_class(s);
  r.gs_facts = global_spectrum_facts(s);
  r.end_of_max_ideal = endomorphism_semigroup(maximal_ideal(s));
  return r;
}

}  // namespace semicurve
