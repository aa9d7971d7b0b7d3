#pragma once

#include <iosfwd>

namespace hopfverify::cli {

/// Exit codes of every command.
enum Exit { kPass = 0, kCheckFailed = 1, kConfigError = 2 };

/// Runs the command line; output goes to `out`, progress and errors to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hopfverify::cli
