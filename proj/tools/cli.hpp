#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mmahon::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, budget_exceeded = 3 };

/// Runs one command line (without the program name). Normal output goes to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmahon::cli
