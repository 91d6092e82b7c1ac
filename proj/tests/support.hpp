#pragma once

#include <string>
#include <vector>

#include "oracle.hpp"
#include "semicurve/semicurve.hpp"

namespace testing_support {

/// Oracle view of a library semigroup, rebuilt from its generators only.
inline oracle::Semigroup oracle_of(const semicurve::NumericalSemigroup& s) {
  return oracle::Semigroup::from_generators(s.minimal_generators());
}

/// True iff the library ideal and the oracle set agree on every integer of
/// the window and the library tail starts inside it.
inline bool same_set(const semicurve::RelativeIdeal& e, const oracle::IntSet& o,
                     oracle::Window w) {
  if (e.tail_start() > w.hi || e.min_element() < w.lo) return false;
  for (int z = w.lo; z < w.hi; ++z) {
    if (e.contains(z) != o.contains(z)) return false;
  }
  return true;
}

inline std::vector<int> gaps_of(const oracle::IntSet& o, int upto) {
  std::vector<int> out;
  for (int z = 1; z < upto; ++z) {
    if (!o.contains(z)) out.push_back(z);
  }
  return out;
}

}  // namespace testing_support
