#pragma once

// Command-line front end. Exit status: 0 ok, 1 usage or invalid input,
// 2 theorem violation, 3 truncated graph where completeness is required.

#include <iosfwd>
#include <string>
#include <vector>

namespace clusteralg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;
inline constexpr int kExitTruncated = 3;

/// `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clusteralg
