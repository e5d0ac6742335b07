#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ffl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCertificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffl::cli
