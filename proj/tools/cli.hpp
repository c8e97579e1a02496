#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace omalous::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kIo = 3 };

/// Runs `omalous <tangent|check|search|rr|slope|catalog> [flags]`.
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omalous::cli
