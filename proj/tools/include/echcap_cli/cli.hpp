#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace echcap::cli {

enum ExitCode : int {
  kOk = 0,
  kObstructed = 1,
  kUsage = 2,
  kBudget = 3,
};

struct Environment {
  /// Value of ECHCAP_NODE_LIMIT, if set.
  std::optional<std::string> node_limit;
};

/// Runs one command. args excludes the program name. Normal output goes to
/// `out` in one write once the command has finished; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

}  // namespace echcap::cli
