#pragma once

#include <iosfwd>

namespace jsr {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitNotConverged = 2,
    kExitRejected = 3,
};

/**
 * @brief Entry point of the `jsr-relax` tool.
 *
 * Subcommands: `run` (LR/MR iteration), `oracle` (product-enumeration bounds)
 * and `check` (irreducibility report). Results go to `out`, diagnostics to `err`.
 */
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jsr
