#pragma once

#include <ostream>

namespace nkconf {

inline constexpr const char* kToolVersion = "1.0.0";

/// Exit codes shared by all subcommands.
enum ExitCode : int {
    kExitOk = 0,
    kExitNegative = 1, ///< a well-formed "no": not isomorphic, not orientable, not realized
    kExitBadInput = 2,
    kExitBudget = 3,
};

/// Parses argv and runs one subcommand, writing results to `out` and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace nkconf
