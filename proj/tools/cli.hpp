#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permutiple::cli {

// Process exit codes. Every library error class has its own code.
enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kUsageError = 2,
  kInvalidParams = 3,
  kInvalidDigits = 4,
  kRejectedInput = 5,
  kNotAnLWalk = 6,
  kCapExceeded = 7,
  kBudgetExceeded = 8,
  kUnknownCycleIndex = 9,
  kOverflow = 10,
  kInvalidAlignment = 11,
};

// Runs one command. `args` excludes the program name. Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permutiple::cli
