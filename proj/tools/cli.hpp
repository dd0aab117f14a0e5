#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dehnhom::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kInputError = 1,
  kCounterexamples = 2,
};

// Parses `args` (without the program name) and runs one subcommand, writing
// the result to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dehnhom::cli
