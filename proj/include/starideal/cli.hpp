#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starideal::cli {

/// Exit codes: 0 success, 1 usage or budget error, 2 a suite or
/// classification came out internally inconsistent.
enum ExitCode : int { ok = 0, usage = 1, theorem_violation = 2 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace starideal::cli
