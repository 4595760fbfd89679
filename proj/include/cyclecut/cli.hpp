#ifndef CYCLECUT_CLI_HPP
#define CYCLECUT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclecut {

/// Exit codes: one per CommandResult status.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitHypothesisViolation = 2;
inline constexpr int kExitCounterexamplesFound = 3;

/// The whole CLI behind a testable function: args exclude the program
/// name; structured records go to `out` (one per line), diagnostics to
/// `err`. Returns the exit code.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

}  // namespace cyclecut

#endif
