#ifndef AFFVCS_CLI_HPP
#define AFFVCS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace affvcs::cli {

enum ExitCode : int { kPass = 0, kMathFailure = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affvcs::cli

#endif
