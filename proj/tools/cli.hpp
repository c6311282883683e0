#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nagsb::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kNegative = 1,
  kInputError = 2,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nagsb::cli
