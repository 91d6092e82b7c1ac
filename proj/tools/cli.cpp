#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>

#include "io.hpp"
#include "verify.hpp"

namespace semicurve::cli {

namespace {

using io::json;

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::string str(bool b) { return b ? "true" : "false"; }

void row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(30) << key << value << '\n';
}

NumericalSemigroup semigroup_arg(const std::string& text) {
  try {
    return io::parse_semigroup(text);
  } catch (const std::exception& e) {
    throw UsageError("--sgp '" + text + "': " + e.what());
  }
}

IdealOp ideal_op_arg(const std::string& text) {
  if (text == "dual") return IdealOp::Dual;
  if (text == "bidual") return IdealOp::Bidual;
  if (text == "trace") return IdealOp::Trace;
  if (text == "endo") return IdealOp::Endo;
  if (text == "reflexive") return IdealOp::Reflexive;
  if (text == "mingens") return IdealOp::MinGens;
  throw UsageError("unknown --op '" + text +
                   "' (expected dual, bidual, trace, endo, reflexive or mingens)");
}

const char* op_name(IdealOp op) {
  switch (op) {
    case IdealOp::Dual: return "dual";
    case IdealOp::Bidual: return "bidual";
    case IdealOp::Trace: return "trace";
    case IdealOp::Endo: return "endo";
    case IdealOp::Reflexive: return "reflexive";
    case IdealOp::MinGens: return "mingens";
  }
  return "?";
}

std::string ideal_label(const RelativeIdeal& e) {
  return "(" + io::join(minimal_ideal_generators(e)) + ")";
}

int run_info(const InfoCmd& c, bool as_json, std::ostream& out) {
  const auto inv = invariants(c.semigroup);
  const bool sym = is_symmetric(c.semigroup);
  if (as_json) {
    json j = io::to_json(c.semigroup);
    j["invariants"] = io::to_json(inv);
    j["symmetric"] = sym;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  row(out, "semigroup", to_string(c.semigroup));
  row(out, "generators", io::join(c.semigroup.minimal_generators()));
  row(out, "gaps", io::join(c.semigroup.gaps()));
  row(out, "genus", std::to_string(inv.genus));
  row(out, "frobenius", std::to_string(inv.frobenius));
  row(out, "conductor_number", std::to_string(inv.conductor));
  row(out, "multiplicity", std::to_string(inv.multiplicity));
  row(out, "embedding_dimension", std::to_string(inv.embedding_dimension));
  row(out, "apery_set", io::join(inv.apery_set));
  row(out, "pseudo_frobenius", io::join(inv.pseudo_frobenius));
  row(out, "type", std::to_string(inv.type));
  row(out, "symmetric", str(sym));
  return kExitOk;
}

int run_ideal(const IdealCmd& c, bool as_json, std::ostream& out) {
  json result;
  std::string text;
  switch (c.op) {
    case IdealOp::Dual:
    case IdealOp::Bidual:
    case IdealOp::Trace: {
      const auto r = c.op == IdealOp::Dual     ? dual(c.ideal)
                     : c.op == IdealOp::Bidual ? bidual(c.ideal)
                                               : trace(c.ideal);
      result = io::to_json(r);
      text = to_string(r) + "  generators " + ideal_label(r);
      break;
    }
    case IdealOp::Endo: {
      const auto t = endomorphism_semigroup(c.ideal);
      result = io::to_json(t);
      text = to_string(t);
      break;
    }
    case IdealOp::Reflexive: {
      const bool r = is_reflexive(c.ideal);
      result = r;
      text = str(r);
      break;
    }
    case IdealOp::MinGens: {
      const auto g = minimal_ideal_generators(c.ideal);
      result = g;
      text = io::join(g);
      break;
    }
  }
  if (as_json) {
    out << json{{"semigroup", io::to_json(c.semigroup)},
                {"ideal", io::to_json(c.ideal)},
                {"op", op_name(c.op)},
                {"result", result}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  row(out, "semigroup", to_string(c.semigroup));
  row(out, "ideal", to_string(c.ideal) + "  generators " + ideal_label(c.ideal));
  row(out, "op", op_name(c.op));
  row(out, "result", text);
  return kExitOk;
}

void print_chain(const ChainReport& r, bool quiet, std::ostream& out) {
  if (r.test_ideals.empty()) {
    out << "R_0 = " << to_string(r.rings.front()) << "  (no steps)\n";
  }
  for (std::size_t i = 0; i < r.test_ideals.size(); ++i) {
    out << "R_" << i << " = " << to_string(r.rings[i]) << " --[" << ideal_label(r.test_ideals[i])
        << "]--> R_" << i + 1 << " = " << to_string(r.rings[i + 1]) << '\n';
  }
  row(out, "length", std::to_string(r.length));
  row(out, "leuschke_bound", std::to_string(r.leuschke_bound));
  if (!quiet) {
    out << "note: gl.dim End(R_0 + ... + R_l) <= leuschke_bound; the exact value is not "
           "computed\n";
    if (r.strategy.kind == TestIdealStrategy::Kind::MaximalIdeal) {
      out << "note: the singular locus of a monomial branch is the closed point, so the "
             "maximal ideal stands in for the radical of the Jacobian ideal\n";
    }
  }
}

int run_chain(const ChainCmd& c, bool as_json, bool quiet, std::ostream& out, std::ostream& err) {
  try {
    const auto r = normalization_chain(c.semigroup, c.strategy);
    if (as_json) {
      out << io::to_json(r).dump(2) << '\n';
    } else {
      print_chain(r, quiet, out);
    }
    return kExitOk;
  } catch (const StalledChain& e) {
    if (as_json) {
      json j = io::to_json(e.partial());
      j["stalled"] = true;
      j["error"] = e.what();
      out << j.dump(2) << '\n';
    } else {
      print_chain(e.partial(), true, out);
    }
    err << "stalled chain: " << e.what() << '\n';
    return kExitFailure;
  }
}

int run_classify(const ClassifyCmd& c, bool as_json, bool quiet, std::ostream& out) {
  const auto r = classify(c.semigroup);
  if (as_json) {
    out << io::to_json(r).dump(2) << '\n';
    return kExitOk;
  }
  row(out, "semigroup", to_string(r.semigroup));
  row(out, "regular", str(r.is_regular));
  row(out, "gorenstein", str(r.is_gorenstein));
  row(out, "nearly_gorenstein", str(r.is_nearly_gorenstein));
  row(out, "almost_gorenstein", str(r.is_almost_gorenstein));
  row(out, "one_step_normal", str(r.is_one_step_normal));
  row(out, "End(m)", to_string(r.end_of_max_ideal));
  row(out, "max_ideal_selfdual", str(r.max_ideal_selfdual));
  row(out, "max_ideal_isom_normalization", str(r.max_ideal_isom_normalization));
  row(out, "ade_class", to_string(r.ade_class));
  const auto& gs = r.gs_facts;
  row(out, "gs", std::string("1 ") + (gs.one_in_gs ? "in" : "not in") + ", 2 " +
                     (gs.two_in_gs ? "in" : "not in") + ", 3 " +
                     (gs.three_in_gs ? "in" : "not in") + ", beyond " + gs.beyond);
  if (!gs.exact.empty()) row(out, "gs_exact", gs.exact);
  if (!quiet) row(out, "gs_note", gs.note);
  return kExitOk;
}

int run_over(const OverCmd& c, bool as_json, bool quiet, std::ostream& out) {
  const auto overs = oversemigroups(c.semigroup);
  std::vector<ExtensionRecord> records;
  records.reserve(overs.size());
  bool ok = true;
  int reflexive = 0;
  for (const auto& t : overs) {
    records.push_back(verify_extension(c.semigroup, t));
    const auto& r = records.back();
    ok = ok && r.trace_equals_conductor() && r.endo_roundtrip_ok();
    reflexive += r.is_reflexive_over_base ? 1 : 0;
  }
  const auto inj = conductor_injectivity_check(c.semigroup);
  ok = ok && inj.holds();

  if (as_json) {
    json arr = json::array();
    for (const auto& r : records) arr.push_back(io::to_json(r));
    if (c.verify) {
      out << json{{"extensions", arr}, {"injectivity", io::to_json(inj)}, {"ok", ok}}.dump(2)
          << '\n';
    } else {
      out << arr.dump(2) << '\n';
    }
  } else {
    out << std::left << std::setw(20) << "extension" << std::setw(28) << "conductor"
        << std::setw(11) << "reflexive" << std::setw(10) << "tr=cond"
        << "End-roundtrip\n";
    for (const auto& r : records) {
      out << std::left << std::setw(20) << to_string(r.extension) << std::setw(28)
          << to_string(r.relative_conductor) << std::setw(11) << str(r.is_reflexive_over_base)
          << std::setw(10) << str(r.trace_equals_conductor())
          << (r.endo_roundtrip_ok() ? "ok" : "MISMATCH") << '\n';
    }
    if (!quiet) {
      out << records.size() << " extensions, " << reflexive << " reflexive over the base\n";
    }
    if (c.verify) {
      out << "conductor injectivity: " << inj.pairs_checked << " pairs, "
          << inj.isomorphic_pairs.size() << " isomorphic"
          << (inj.asserted() ? " (asserted: base is Gorenstein)" : " (not asserted)") << '\n';
      out << (ok ? "all extension checks hold" : "extension checks FAILED") << '\n';
    }
  }
  return (c.verify && !ok) ? kExitFailure : kExitOk;
}

int run_verify(const VerifyCmd& c, bool as_json, bool quiet, std::ostream& out) {
  const auto summary = verify::verify_universe(c.max_genus, c.jobs, c.genus_cap);
  if (as_json) {
    json failures = json::array();
    for (const auto& f : summary.failures) {
      failures.push_back({{"semigroup", f.semigroup},
                          {"ideal", f.ideal},
                          {"property", f.property},
                          {"expected", f.expected},
                          {"got", f.got}});
    }
    out << json{{"max_genus", c.max_genus},
                {"semigroups", summary.semigroups},
                {"ideals", summary.ideals},
                {"checks", summary.checks},
                {"failures", failures},
                {"ok", summary.ok()}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& f : summary.failures) out << f.line() << '\n';
    if (!quiet || !summary.ok()) out << summary.text() << '\n';
  }
  return summary.ok() ? kExitOk : kExitFailure;
}

int parse_genus_value(const std::string& text, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError(std::string(what) + ": not an integer: '" + text + "'");
  }
  return v;
}

}  // namespace

int genus_cap_from_env() {
  const char* env = std::getenv("SEMICURVE_MAX_GENUS");
  if (env == nullptr || *env == '\0') return kDefaultGenusCap;
  const int cap = parse_genus_value(env, "SEMICURVE_MAX_GENUS");
  if (cap < 0) throw UsageError("SEMICURVE_MAX_GENUS must be >= 0");
  return cap;
}

std::optional<Command> parse_args(const std::vector<std::string>& args, std::ostream& out,
                                  int genus_cap) {
  CLI::App app{"Trace ideals, conductors and normalization chains of monomial curves",
               "semicurve"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Command cmd;
  app.add_flag("--json", cmd.json, "Emit JSON instead of text");
  app.add_flag("-q,--quiet", cmd.quiet, "Suppress notes and summaries");

  std::string sgp, gens, set, op, strategy = "maximal";
  bool over_verify = false;
  int max_genus = 6, jobs = 1;

  auto* info = app.add_subcommand("info", "Numerical invariants of a semigroup");
  info->add_option("--sgp", sgp, "Generators, e.g. 3,5,7")->required();

  auto* ideal = app.add_subcommand("ideal", "Apply an operation to a relative ideal");
  ideal->add_option("--sgp", sgp, "Generators of the ambient semigroup")->required();
  auto* gens_opt = ideal->add_option("--gens", gens, "Ideal generators (may be negative)");
  auto* set_opt = ideal->add_option("--set", set, "Explicit elements, e.g. '0,2,3;tail=5'");
  gens_opt->excludes(set_opt);
  ideal->add_option("--op", op, "dual|bidual|trace|endo|reflexive|mingens")->required();

  auto* chain = app.add_subcommand("chain", "Grauert-Remmert normalization chain");
  chain->add_option("--sgp", sgp, "Generators")->required();
  chain->add_option("--strategy", strategy, "maximal|conductor|ideal:<gens>")
      ->capture_default_str();

  auto* cls = app.add_subcommand("classify", "Gorenstein-type and ADE classification");
  cls->add_option("--sgp", sgp, "Generators")->required();

  auto* over = app.add_subcommand("over", "Oversemigroups and relative conductors");
  over->add_option("--sgp", sgp, "Generators")->required();
  over->add_flag("--verify", over_verify, "Check the conductor/trace theory; exit 1 on failure");

  auto* ver = app.add_subcommand("verify", "Verify every property over a genus-bounded universe");
  ver->add_option("--max-genus", max_genus, "Largest genus to enumerate")->capture_default_str();
  ver->add_option("--jobs", jobs, "Worker threads")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (info->parsed()) {
    cmd.sub = InfoCmd{semigroup_arg(sgp)};
  } else if (ideal->parsed()) {
    auto s = semigroup_arg(sgp);
    if (gens.empty() == set.empty()) throw UsageError("ideal needs exactly one of --gens or --set");
    try {
      auto e = io::parse_ideal(s, gens.empty() ? "set=" + set : "gens=" + gens);
      // Evaluate every part before the aggregate is built: GCC 11 leaks
      // already-initialized members when a later initializer throws.
      const IdealOp parsed_op = ideal_op_arg(op);
      cmd.sub = IdealCmd{std::move(s), std::move(e), parsed_op};
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageError(std::string("ideal: ") + e.what());
    }
  } else if (chain->parsed()) {
    auto s = semigroup_arg(sgp);
    TestIdealStrategy st;
    try {
      st = io::parse_strategy(strategy);
    } catch (const io::ParseError& e) {
      throw UsageError(std::string("--strategy: ") + e.what());
    }
    cmd.sub = ChainCmd{std::move(s), std::move(st)};
  } else if (cls->parsed()) {
    cmd.sub = ClassifyCmd{semigroup_arg(sgp)};
  } else if (over->parsed()) {
    cmd.sub = OverCmd{semigroup_arg(sgp), over_verify};
  } else if (ver->parsed()) {
    if (max_genus < 0 || max_genus > genus_cap) {
      throw UsageError("--max-genus must be in [0, " + std::to_string(genus_cap) +
                       "] (set SEMICURVE_MAX_GENUS to raise the cap)");
    }
    if (jobs < 1) throw UsageError("--jobs must be >= 1");
    cmd.sub = VerifyCmd{max_genus, jobs, genus_cap};
  }
  return cmd;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  return std::visit(
      Overloaded{
          [&](const InfoCmd& c) { return run_info(c, cmd.json, out); },
          [&](const IdealCmd& c) { return run_ideal(c, cmd.json, out); },
          [&](const ChainCmd& c) { return run_chain(c, cmd.json, cmd.quiet, out, err); },
          [&](const ClassifyCmd& c) { return run_classify(c, cmd.json, cmd.quiet, out); },
          [&](const OverCmd& c) { return run_over(c, cmd.json, cmd.quiet, out); },
          [&](const VerifyCmd& c) { return run_verify(c, cmd.json, cmd.quiet, out); },
      },
      cmd.sub);
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<Command> cmd;
  try {
    cmd = parse_args(args, out, genus_cap_from_env());
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nrun 'semicurve --help' for usage\n";
    return kExitUsage;
  }
  if (!cmd) return kExitOk;
  return run(*cmd, out, err);
}

}  // namespace semicurve::cli
