#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace resland::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kInputError = 2 };

/// Runs the command line `args` (without the program name). Primary output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace resland::cli
