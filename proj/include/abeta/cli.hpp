#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abeta::cli {

/// Exit codes: 0 success, 1 verification violations, 2 usage or domain error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Data goes to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abeta::cli
