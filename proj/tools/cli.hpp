#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace codemix::cli {

enum ExitCode : int { kOk = 0, kOperationalError = 1, kUsageError = 2 };

/// Parses argv (program name first) and runs one subcommand. Diagnostics go
/// to `err` as a single line; "-" paths mean stdin/stdout.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace codemix::cli
