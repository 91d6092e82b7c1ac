#pragma once

// Batch property verification over every semigroup of bounded genus and every
// normalized ideal of each.

#include <cstddef>
#include <string>
#include <vector>

#include "semicurve/semigroup.hpp"

namespace semicurve::verify {

struct Failure {
  std::string semigroup;
  std::string ideal;  ///< "-" for semigroup-level properties
  std::string property;
  std::string expected;
  std::string got;

  /// "FAIL\t<semigroup>\t<ideal>\t<property>\texpected=<..>\tgot=<..>"
  std::string line() const;
};

struct SemigroupResult {
  std::size_t ideals = 0;
  std::size_t checks = 0;
  std::vector<Failure> failures;
};

struct Summary {
  std::size_t semigroups = 0;
  std::size_t ideals = 0;
  std::size_t checks = 0;
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
  std::string text() const;
};

/// Every property for one semigroup.
SemigroupResult verify_semigroup(const NumericalSemigroup& s);

/// Fans out over `jobs` worker threads; the result does not depend on `jobs`.
Summary verify_universe(int max_genus, int jobs, int genus_cap = kDefaultGenusCap);

}  // namespace semicurve::verify
