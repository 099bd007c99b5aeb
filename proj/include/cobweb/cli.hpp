#ifndef COBWEB_CLI_HPP
#define COBWEB_CLI_HPP

#include <ostream>
#include <span>
#include <string>

namespace cobweb::cli {

/// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kGuardRefused = 3,
};

/// Levels beyond this depth trigger a size warning for commands that
/// materialize every vertex.
inline constexpr unsigned kWarnDepth = 25;

/// Runs one `cobweb` invocation. `args` excludes the program name. Data goes
/// to `out` (or the --out file), diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cobweb::cli

#endif  // COBWEB_CLI_HPP
