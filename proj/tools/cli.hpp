#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gdlca {

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitUsage = 2 };

/// Runs one command line (without the program name). Reports go to `out`, diagnostics to `err`.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gdlca
