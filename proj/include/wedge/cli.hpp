#pragma once

// `wedge` command line: measure | classify | maximize | check.
//
// Reports go to `out` as JSON, diagnostics to `err`. Exit status is 0 on
// success, 1 on a validation error (bad flags, malformed or unnormalized
// state file) and 2 when an internal-consistency check fails.

#include <ostream>
#include <string>
#include <vector>

namespace wedge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitConsistency = 2;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace wedge::cli
