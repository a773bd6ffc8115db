#pragma once

#include <ostream>

namespace cubewall {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitCapability = 3,
};

/// Largest rank accepted by `trace` and by `xray --faces-only`.
inline constexpr int kMaxTraceRank = 8;

/// Entry point shared by the binary and the tests; never calls exit().
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cubewall
