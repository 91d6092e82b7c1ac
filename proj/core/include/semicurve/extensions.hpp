#pragma once

// Finite birational extensions in the monomial category: the oversemigroups
// S in T in N, their relative conductors S - T and the trace/conductor
// correspondence between them.

#include <utility>
#include <vector>

#include "semicurve/ideal.hpp"
#include "semicurve/semigroup.hpp"

namespace semicurve {

/// All T with S in T in N, each once, ordered by genus descending and then by
/// gap set. Built upward from S by adjoining one gap at a time and closing.
std::vector<NumericalSemigroup> oversemigroups(const NumericalSemigroup& s);

/// C_{T/S} = S - T, the largest common ideal of S and T. Throws
/// NotAnExtension unless S is contained in T.
RelativeIdeal relative_conductor(const NumericalSemigroup& s,
                                 const NumericalSemigroup& t);

struct ExtensionRecord {
  NumericalSemigroup extension;
  RelativeIdeal relative_conductor;
  /// tr_S(T) with T viewed as a fractional S-ideal.
  RelativeIdeal trace_as_ideal;
  bool is_reflexive_over_base = false;
  NumericalSemigroup endo_of_conductor;

  /// tr_S(T) == C_{T/S}. Always expected; false signals a bug.
  bool trace_equals_conductor() const { return trace_as_ideal == relative_conductor; }
  /// End(C_{T/S}) == T whenever T is reflexive over S.
  bool endo_roundtrip_ok() const {
    return !is_reflexive_over_base || endo_of_conductor == extension;
  }
};

ExtensionRecord verify_extension(const NumericalSemigroup& s,
                                 const NumericalSemigroup& t);

struct ConductorCriterion {
  bool trace_in_conductor = false;  ///< tr(E) in C_{T/S}
  bool is_T_module = false;         ///< T + E in E
};

/// Both sides of the trace/conductor criterion for E against T. They agree
/// when E is reflexive.
ConductorCriterion conductor_criterion(const RelativeIdeal& e,
                                       const NumericalSemigroup& t);

struct ConductorInjectivityReport {
  NumericalSemigroup base;
  bool symmetric = false;
  int extension_count = 0;
  int pairs_checked = 0;
  /// Distinct oversemigroups whose relative conductors are isomorphic.
  std::vector<std::pair<NumericalSemigroup, NumericalSemigroup>> isomorphic_pairs;

  /// Injectivity is only claimed for symmetric S.
  bool asserted() const { return symmetric; }
  bool holds() const { return !symmetric || isomorphic_pairs.empty(); }
};

ConductorInjectivityReport conductor_injectivity_check(const NumericalSemigroup& s);

}  // namespace semicurve
