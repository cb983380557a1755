#pragma once

#include <iosfwd>

namespace lpopnorm::cli {

/// Exit statuses of the lpopnorm command line tool.
enum ExitStatus : int {
  kSuccess = 0,
  kViolation = 1,  // inequality violation or unsound certificate
  kUsage = 2,
};

/// Parses argv and runs one subcommand, writing results to out and
/// diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lpopnorm::cli
