#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace delbound {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitResource = 3,
  kExitTimeout = 4,
};

/// Entry point for the `delbound` tool: bounds, verify, graph, search, codec.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace delbound
