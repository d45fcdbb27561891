#pragma once

#include <iosfwd>

namespace biclosure::cli {

enum ExitCode : int {
  kPass = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kBoundExceeded = 3,
};

/// Parses argv, runs one verb, writes the JSON result to `out` (or --out)
/// and a one-line summary plus diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace biclosure::cli
