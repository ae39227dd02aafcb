#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "framed/error.hpp"

namespace framed::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kPrecondition = 3,
  kTooLarge = 4,
};

int exit_code(Errc code) noexcept;

/// Runs one command line (program name excluded). Output and diagnostics go
/// to the given streams; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace framed::cli
