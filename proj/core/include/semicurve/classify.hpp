#pragma once

// Classification predicates for monomial curve singularities.
//
// Note on k[[t^5,t^6,t^7]]: its maximal ideal has End = <5,6,7,8,9> and is not
// contained in the conductor [10, inf), so the ring is *not* 1-step normal,
// although it is sometimes quoted as a 1-step normal example. The predicates
// here follow the direct computation.

#include <string>

#include "semicurve/ideal.hpp"
#include "semicurve/semigroup.hpp"

namespace semicurve {

enum class AdeKind { Regular, A2n, E6, E8, Other };

/// Simple plane branch type read off the minimal generators. Only the
/// irreducible simple curves occur: D-types and odd A-types are reducible.
struct AdeClass {
  AdeKind kind = AdeKind::Other;
  int n = 0;  ///< for A2n: the curve is A_{2n} with semigroup <2, 2n+1>

  friend bool operator==(const AdeClass&, const AdeClass&) = default;
};

/// "Regular", "A4", "E6", "E8", "Other".
std::string to_string(const AdeClass& c);

/// Membership facts for the global spectrum gs(R) = {gl.dim End(M) : M CM}.
/// Only 1, 2 and 3 are ever decided.
struct GlobalSpectrumFacts {
  bool one_in_gs = true;
  bool two_in_gs = false;
  bool three_in_gs = false;
  std::string beyond = "unknown";
  /// Set when the listed facts pin gs(R) down completely, e.g. "{1}".
  std::string exact;
  std::string note;

  friend bool operator==(const GlobalSpectrumFacts&, const GlobalSpectrumFacts&) = default;
};

struct ClassificationReport {
  NumericalSemigroup semigroup;
  bool is_regular = true;
  bool is_gorenstein = true;
  bool is_nearly_gorenstein = true;
  bool is_almost_gorenstein = true;
  bool is_one_step_normal = true;
  bool max_ideal_selfdual = true;
  bool max_ideal_isom_normalization = true;
  AdeClass ade_class;
  GlobalSpectrumFacts gs_facts;
  NumericalSemigroup end_of_max_ideal;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// m contained in the conductor, i.e. S = {0} u [c, inf).
bool is_one_step_normal(const NumericalSemigroup& s);
bool is_gorenstein(const NumericalSemigroup& s);
/// m contained in tr(K).
bool is_nearly_gorenstein(const NumericalSemigroup& s);
/// m + K contained in m (almost symmetric).
bool is_almost_gorenstein(const NumericalSemigroup& s);
/// 2g == c + type - 1; must agree with is_almost_gorenstein.
bool is_almost_symmetric_by_type(const NumericalSemigroup& s);
/// m isomorphic to its dual S - m.
bool max_ideal_selfdual(const NumericalSemigroup& s);
/// m isomorphic to N.
bool max_ideal_isom_normalization(const NumericalSemigroup& s);
AdeClass ade_class(const NumericalSemigroup& s);
GlobalSpectrumFacts global_spectrum_facts(const NumericalSemigroup& s);

ClassificationReport classify(const NumericalSemigroup& s);

}  // namespace semicurve
