#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace goedel::cli {

enum ExitCode : int {
  kOk = 0,
  kCounterexample = 1,
  kParseError = 2,
  kIoError = 3,
};

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace goedel::cli
