#include "io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace semicurve::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token) {
  token = trim(token);
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError("not an integer: '" + std::string(token) + "'");
  }
  return value;
}

const char* ade_name(AdeKind k) {
  switch (k) {
    case AdeKind::Regular: return "Regular";
    case AdeKind::A2n: return "A2n";
    case AdeKind::E6: return "E6";
    case AdeKind::E8: return "E8";
    case AdeKind::Other: return "Other";
  }
  return "Other";
}

AdeKind ade_kind_from(const std::string& name) {
  for (auto k : {AdeKind::Regular, AdeKind::A2n, AdeKind::E6, AdeKind::E8, AdeKind::Other}) {
    if (name == ade_name(k)) return k;
  }
  throw ParseError("unknown ADE class '" + name + "'");
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty integer list");
  std::vector<int> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_int(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

NumericalSemigroup parse_semigroup(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '<') {
    if (text.back() != '>') throw ParseError("unbalanced '<' in semigroup");
    text = text.substr(1, text.size() - 2);
  }
  const auto gens = parse_int_list(text);
  if (std::any_of(gens.begin(), gens.end(), [](int g) { return g < 1; })) {
    throw ParseError("semigroup generators must be positive");
  }
  return NumericalSemigroup::from_generators(gens);
}

RelativeIdeal parse_ideal(const NumericalSemigroup& s, std::string_view text) {
  text = trim(text);
  if (text.starts_with("gens=")) {
    return RelativeIdeal::from_generators(s, parse_int_list(text.substr(5)));
  }
  if (text.starts_with("set=")) {
    text.remove_prefix(4);
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) throw ParseError("set ideal needs ';tail=<t>'");
    auto tail_part = trim(text.substr(semi + 1));
    if (!tail_part.starts_with("tail=")) throw ParseError("set ideal needs ';tail=<t>'");
    const int tail = parse_int(tail_part.substr(5));
    const auto body = trim(text.substr(0, semi));
    std::vector<int> elements;
    if (!body.empty()) elements = parse_int_list(body);
    return RelativeIdeal::from_set(s, elements, tail);
  }
  throw ParseError("ideal must be 'gens=...' or 'set=...;tail=...'");
}

TestIdealStrategy parse_strategy(std::string_view text) {
  text = trim(text);
  if (text == "maximal") return TestIdealStrategy::maximal_ideal();
  if (text == "conductor") return TestIdealStrategy::conductor();
  if (text.starts_with("ideal:")) {
    return TestIdealStrategy::custom(parse_int_list(text.substr(6)));
  }
  throw ParseError("unknown strategy '" + std::string(text) +
                   "' (expected maximal, conductor or ideal:<gens>)");
}

std::string join(const std::vector<int>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

json to_json(const NumericalSemigroup& s) {
  return {{"generators", s.minimal_generators()},
          {"gaps", s.gaps()},
          {"frobenius", s.frobenius()},
          {"genus", s.genus()}};
}

NumericalSemigroup semigroup_from_json(const json& j) {
  auto s = NumericalSemigroup::from_generators(j.at("generators").get<std::vector<int>>());
  if (j.contains("gaps") && j.at("gaps").get<std::vector<int>>() != s.gaps()) {
    throw ParseError("semigroup JSON: gaps disagree with generators");
  }
  return s;
}

json to_json(const RelativeIdeal& e) {
  return {{"min", e.min_element()}, {"prefix", e.prefix()}, {"tail_start", e.tail_start()}};
}

RelativeIdeal ideal_from_json(const NumericalSemigroup& ambient, const json& j) {
  auto e = RelativeIdeal::from_set(ambient, j.at("prefix").get<std::vector<int>>(),
                                   j.at("tail_start").get<int>());
  if (j.contains("min") && j.at("min").get<int>() != e.min_element()) {
    throw ParseError("ideal JSON: min disagrees with prefix");
  }
  return e;
}

json to_json(const SemigroupInvariants& inv) {
  return {{"multiplicity", inv.multiplicity},
          {"embedding_dimension", inv.embedding_dimension},
          {"genus", inv.genus},
          {"frobenius", inv.frobenius},
          {"conductor_number", inv.conductor},
          {"apery_set", inv.apery_set},
          {"pseudo_frobenius", inv.pseudo_frobenius},
          {"type", inv.type}};
}

json to_json(const ChainReport& r) {
  json steps = json::array();
  for (std::size_t i = 0; i < r.test_ideals.size(); ++i) {
    steps.push_back({{"index", i},
                     {"from", to_json(r.rings[i])},
                     {"test_ideal", to_json(r.test_ideals[i])},
                     {"test_ideal_generators", minimal_ideal_generators(r.test_ideals[i])},
                     {"to", to_json(r.rings[i + 1])}});
  }
  json rings = json::array();
  for (const auto& ring : r.rings) rings.push_back(to_json(ring));
  return {{"strategy", to_string(r.strategy)},
          {"rings", rings},
          {"steps", steps},
          {"length", r.length},
          {"leuschke_bound", r.leuschke_bound}};
}

json to_json(const ClassificationReport& r) {
  json ade = {{"kind", ade_name(r.ade_class.kind)}, {"label", to_string(r.ade_class)}};
  if (r.ade_class.kind == AdeKind::A2n) ade["n"] = r.ade_class.n;
  json gs = {{"one_in_gs", r.gs_facts.one_in_gs},
             {"two_in_gs", r.gs_facts.two_in_gs},
             {"three_in_gs", r.gs_facts.three_in_gs},
             {"beyond", r.gs_facts.beyond},
             {"exact", r.gs_facts.exact},
             {"note", r.gs_facts.note}};
  return {{"semigroup", to_json(r.semigroup)},
          {"is_regular", r.is_regular},
          {"is_gorenstein", r.is_gorenstein},
          {"is_nearly_gorenstein", r.is_nearly_gorenstein},
          {"is_almost_gorenstein", r.is_almost_gorenstein},
          {"is_one_step_normal", r.is_one_step_normal},
          {"max_ideal_selfdual", r.max_ideal_selfdual},
          {"max_ideal_isom_normalization", r.max_ideal_isom_normalization},
          {"end_of_max_ideal", to_json(r.end_of_max_ideal)},
          {"ade_class", ade},
          {"gs_facts", gs}};
}

ClassificationReport classification_from_json(const json& j) {
  ClassificationReport r;
  r.semigroup = semigroup_from_json(j.at("semigroup"));
  r.is_regular = j.at("is_regular").get<bool>();
  r.is_gorenstein = j.at("is_gorenstein").get<bool>();
  r.is_nearly_gorenstein = j.at("is_nearly_gorenstein").get<bool>();
  r.is_almost_gorenstein = j.at("is_almost_gorenstein").get<bool>();
  r.is_one_step_normal = j.at("is_one_step_normal").get<bool>();
  r.max_ideal_selfdual = j.at("max_ideal_selfdual").get<bool>();
  r.max_ideal_isom_normalization = j.at("max_ideal_isom_normalization").get<bool>();
  r.end_of_max_ideal = semigroup_from_json(j.at("end_of_max_ideal"));
  const auto& ade = j.at("ade_class");
  r.ade_class.kind = ade_kind_from(ade.at("kind").get<std::string>());
  r.ade_class.n = ade.value("n", 0);
  const auto& gs = j.at("gs_facts");
  r.gs_facts.one_in_gs = gs.at("one_in_gs").get<bool>();
  r.gs_facts.two_in_gs = gs.at("two_in_gs").get<bool>();
  r.gs_facts.three_in_gs = gs.at("three_in_gs").get<bool>();
  r.gs_facts.beyond = gs.at("beyond").get<std::string>();
  r.gs_facts.exact = gs.value("exact", "");
  r.gs_facts.note = gs.value("note", "");
  return r;
}

json to_json(const ExtensionRecord& r) {
  return {{"extension", to_json(r.extension)},
          {"relative_conductor", to_json(r.relative_conductor)},
          {"trace_as_ideal", to_json(r.trace_as_ideal)},
          {"is_reflexive_over_base", r.is_reflexive_over_base},
          {"endo_of_conductor", to_json(r.endo_of_conductor)},
          {"trace_equals_conductor", r.trace_equals_conductor()},
          {"endo_roundtrip_ok", r.endo_roundtrip_ok()}};
}

json to_json(const ConductorInjectivityReport& r) {
  json pairs = json::array();
  for (const auto& [a, b] : r.isomorphic_pairs) {
    pairs.push_back({to_json(a), to_json(b)});
  }
  return {{"base", to_json(r.base)},
          {"symmetric", r.symmetric},
          {"extension_count", r.extension_count},
          {"pairs_checked", r.pairs_checked},
          {"isomorphic_pairs", pairs},
          {"asserted", r.asserted()},
          {"holds", r.holds()}};
}

}  // namespace semicurve::io
