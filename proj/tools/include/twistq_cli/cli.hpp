#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twistq::cli {

enum ExitCode : int { kOk = 0, kVerdictFalse = 1, kInputError = 2, kInternalError = 3 };

// Runs one command line (args excludes the program name). Output goes to out,
// diagnostics to err; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Executes every [[command]] of a TOML batch file. Each command inherits the
// file-level type, depth, window and json settings unless it overrides them.
// Returns the worst exit code seen.
int run_batch(const std::string& path, std::ostream& out, std::ostream& err);

}  // namespace twistq::cli
