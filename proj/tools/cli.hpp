#pragma once

#include <iosfwd>

namespace duval::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kBadInput = 2,
  kBudgetExceeded = 3,
  kNotNegativeDefinite = 4,
};

/// Entry point of the `duval` tool. Payload goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace duval::cli
