#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace npw::cli {

enum ExitCode : int { kOk = 0, kValidationFailure = 1, kUsageError = 2 };

// Runs one command line (args excludes the program name). Diagnostics go to `err` as a single
// line; data goes to `out` unless the command writes to --out.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace npw::cli
