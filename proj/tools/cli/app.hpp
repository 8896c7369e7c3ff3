#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace taylorhess::cli {

enum ExitCode : int {
  kOk = 0,
  kExpectationFailed = 1,
  kUsage = 2,
  kUnsupported = 3,
  kInternal = 4,
};

/// Parses argv, runs the command, writes the report to --out or `out`.
/// Diagnostics go to `err`. Returns an ExitCode.
int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace taylorhess::cli
