#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geoforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand; args excludes the program name. The document goes to
// --output (atomically replaced) or to out for "-"; diagnostics go to err.
// Returns 0 on success, 1 for invalid input geometry, 2 for usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geoforge::cli
