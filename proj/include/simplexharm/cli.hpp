#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace simplexharm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConsistency = 3;

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace simplexharm::cli
