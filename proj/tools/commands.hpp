#pragma once

#include <iosfwd>

namespace intertwine::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kParseError = 2, kSemanticError = 3 };

/// Runs the command line tool; output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace intertwine::cli
