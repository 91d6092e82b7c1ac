#pragma once

// Grauert-Remmert normalization chains R_0 = S, R_{i+1} = End(I_i) where I_i
// is a test ideal of R_i, stopping at N.
//
// For a monomial branch the singular locus is the closed point, so the
// maximal-ideal strategy plays the role of the radical of the Jacobian ideal.

#include <string>
#include <vector>

#include "semicurve/error.hpp"
#include "semicurve/ideal.hpp"
#include "semicurve/semigroup.hpp"

namespace semicurve {

struct TestIdealStrategy {
  enum class Kind { MaximalIdeal, Conductor, Custom };

  Kind kind = Kind::MaximalIdeal;
  /// Exponents for Kind::Custom, re-read as generators + R_i in every ring.
  std::vector<int> generators;

  static TestIdealStrategy maximal_ideal() { return {Kind::MaximalIdeal, {}}; }
  static TestIdealStrategy conductor() { return {Kind::Conductor, {}}; }
  static TestIdealStrategy custom(std::vector<int> gens) {
    return {Kind::Custom, std::move(gens)};
  }

  friend bool operator==(const TestIdealStrategy&, const TestIdealStrategy&) = default;
};

/// "maximal", "conductor" or "ideal:a,b,c".
std::string to_string(const TestIdealStrategy& s);

struct ChainReport {
  TestIdealStrategy strategy;
  /// R_0 = S strictly increasing up to R_l = N (or to the stall point).
  std::vector<NumericalSemigroup> rings;
  /// I_i, an ideal of rings[i], one per step taken.
  std::vector<RelativeIdeal> test_ideals;
  int length = 0;
  /// max(length, 1): upper bound for gl.dim End(R_0 + ... + R_l).
  int leuschke_bound = 1;
  /// Each R_j viewed as a fractional R_0-ideal.
  MonomialModule chain_module;
};

/// Raised when a custom test ideal I of R_i != N has End(I) = R_i. Carries
/// the chain computed up to that ring.
class StalledChain : public Error {
 public:
  StalledChain(const std::string& what, ChainReport partial)
      : Error(what), partial_(std::move(partial)) {}
  const ChainReport& partial() const noexcept { return partial_; }

 private:
  ChainReport partial_;
};

RelativeIdeal test_ideal(const NumericalSemigroup& ring, const TestIdealStrategy& strategy);

ChainReport normalization_chain(const NumericalSemigroup& s,
                                const TestIdealStrategy& strategy = TestIdealStrategy::maximal_ideal());

/// Upper bound on the global dimension of End(R_0 + ... + R_l); the exact
/// value is not computed.
int leuschke_bound(const ChainReport& report) noexcept;

}  // namespace semicurve
