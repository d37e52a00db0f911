#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace argtrace::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,       // unreadable file, malformed JSON, bad command line
    kValidationError = 2,  // cycle, duplicate or unknown id, bad query or window
    kAuditFailure = 3,     // a self-audit or internal invariant failed
    kSolverError = 4,      // solver could not run, produced junk, or disagreed
};

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace argtrace::cli
