#pragma once

// Text formats and JSON renderings used by the command-line tool.
//
//   semigroup   "3,5,7" or "<3,5,7>"
//   ideal       "gens=a,b,c" (negative entries allowed) or "set=a,b,...;tail=t"
//   strategy    "maximal" | "conductor" | "ideal:a,b,c"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "semicurve/semicurve.hpp"

namespace semicurve::io {

using json = nlohmann::json;

/// Malformed text input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_int_list(std::string_view text);
NumericalSemigroup parse_semigroup(std::string_view text);
RelativeIdeal parse_ideal(const NumericalSemigroup& s, std::string_view text);
TestIdealStrategy parse_strategy(std::string_view text);

std::string join(const std::vector<int>& xs, std::string_view sep = ",");

json to_json(const NumericalSemigroup& s);
NumericalSemigroup semigroup_from_json(const json& j);

json to_json(const RelativeIdeal& e);
RelativeIdeal ideal_from_json(const NumericalSemigroup& ambient, const json& j);

json to_json(const SemigroupInvariants& inv);
json to_json(const ChainReport& r);
json to_json(const ClassificationReport& r);
ClassificationReport classification_from_json(const json& j);
json to_json(const ExtensionRecord& r);
json to_json(const ConductorInjectivityReport& r);

}  // namespace semicurve::io
