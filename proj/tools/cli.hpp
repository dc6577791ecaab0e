#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyvis::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kParseError = 2,
  kInvalidPolygon = 3,
  kPreconditionFailed = 4,
  kBudgetExceeded = 5,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyvis::cli
