#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace mapf::cli {

enum ExitCode : int {
  kFeasible = 0,
  kInfeasible = 1,
  kAborted = 2,
  kCoverBudget = 3,
  kUsage = 64,
  kParse = 65,
  kIo = 74,
};

/// Runs one command; `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mapf::cli
