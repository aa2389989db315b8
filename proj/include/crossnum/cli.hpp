#pragma once

#include <iosfwd>

namespace crossnum {

enum ExitCode {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitUndecided = 2,
  kExitAuditFailure = 3,
};

/// Entry point of the `crossnum` tool; all output goes to `out` / `err`.
int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err);

} // namespace crossnum
