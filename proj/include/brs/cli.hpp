#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brs {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,  // malformed input and any other failure
  kExitInner = 2,
  kExitNotInBall = 3,
  kExitNonMember = 4,
  kExitInconclusive = 5,
};

/// Runs the tool on `args` (without the program name). JSON input comes from
/// --in or `in`; output goes to --out or `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace brs
