#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sbd::cli {

enum ExitCode : int { kPass = 0, kViolation = 1, kUsage = 2 };

/// Runs the command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sbd::cli
