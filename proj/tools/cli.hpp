#pragma once

#include <ostream>
#include <string_view>

namespace runforge::cli {

inline constexpr std::string_view kVersion = "1.0.0";

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kCapacity = 3,
  kInvariant = 4,
};

/// Entry point behind the `runforge` executable; writes results to `out` and
/// diagnostics to `err`, returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace runforge::cli
