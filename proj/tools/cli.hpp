#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fqsum::cli {

enum ExitCode : int { kOk = 0, kCounterexample = 1, kUsage = 2, kInternal = 3 };

// Runs the command line (args excludes the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fqsum::cli
