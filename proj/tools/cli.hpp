#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isgd::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,
  kInputError = 2,  // parse, IO or usage
};

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isgd::cli
