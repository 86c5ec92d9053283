#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lfsrcyc {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,  // oracle-check found a disagreement
  kExitParse = 2,
  kExitDomain = 3,
  kExitResource = 4,
};

// Runs the command line given without the program name. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lfsrcyc
