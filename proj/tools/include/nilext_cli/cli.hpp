#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilext::cli {

enum ExitCode : int { kOk = 0, kCertificateFailed = 1, kInputError = 2 };

/// Runs one command. `args` excludes the program name. The report goes to
/// `out` (or to --output), diagnostics and usage to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilext::cli
