#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure (or a
// stalled chain), 2 usage error.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "semicurve/semicurve.hpp"

namespace semicurve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class IdealOp { Dual, Bidual, Trace, Endo, Reflexive, MinGens };

struct InfoCmd {
  NumericalSemigroup semigroup;
};
struct IdealCmd {
  NumericalSemigroup semigroup;
  RelativeIdeal ideal;
  IdealOp op;
};
struct ChainCmd {
  NumericalSemigroup semigroup;
  TestIdealStrategy strategy;
};
struct ClassifyCmd {
  NumericalSemigroup semigroup;
};
struct OverCmd {
  NumericalSemigroup semigroup;
  bool verify = false;
};
struct VerifyCmd {
  int max_genus = 6;
  int jobs = 1;
  int genus_cap = kDefaultGenusCap;
};

struct Command {
  std::variant<InfoCmd, IdealCmd, ChainCmd, ClassifyCmd, OverCmd, VerifyCmd> sub;
  bool json = false;
  bool quiet = false;
};

/// Genus cap from SEMICURVE_MAX_GENUS, or the default when unset. Throws
/// UsageError on a malformed value.
int genus_cap_from_env();

/// `args` excludes the program name. Throws UsageError on malformed input;
/// returns nullopt after printing help to `out` when --help was requested.
std::optional<Command> parse_args(const std::vector<std::string>& args, std::ostream& out,
                                  int genus_cap);

int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse_args + run with the exit-code contract applied.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semicurve::cli
