#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orbent::cli {

enum ExitCode : int {
  kOk = 0,
  kIdentityFailure = 1,
  kParseError = 2,
  kDomainError = 3,
};

/// Runs `orbit-entropy` with `args` (program name excluded). Data goes to
/// `out`, diagnostics to `err`; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbent::cli
