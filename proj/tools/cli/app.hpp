#pragma once

#include <ostream>

namespace casimir::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kSuccess = 0, kValidation = 2, kNumerical = 3 };

/// Runs the `casimir` command line. Reports go to `out` unless `--out` names
/// a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli
