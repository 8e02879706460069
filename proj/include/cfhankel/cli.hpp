#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfh::cli {

enum ExitCode : int { success = 0, disagreement = 1, usage_error = 2, computation_error = 3 };

/// Runs one invocation. `args` excludes the program name; "-" as a file
/// argument reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cfh::cli
