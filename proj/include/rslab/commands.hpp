#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rslab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitAuditFailed = 2;

// Parses argv (program name first) and runs one subcommand. Returns the exit
// code; diagnostics go to err.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace rslab
