#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nefcone::cli {

enum ExitCode : int { kSuccess = 0, kCertificateFailed = 1, kUsage = 2 };

/// Runs one command line (args[0] is the program name). Output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nefcone::cli
