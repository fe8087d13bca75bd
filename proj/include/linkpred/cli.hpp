#pragma once
#include <iosfwd>

namespace linkpred {

/** Process exit codes of the command-line tool. */
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,    ///< bad flags or failed validation
  kExitData = 2,     ///< unreadable or malformed input, unknown node
  kExitNumeric = 3,  ///< numerical failure
};

/**
 * Entry point of the `linkpred` tool: subcommands stats, auc, embed, sweep.
 * Normal output goes to `out`, diagnostics to `err`.
 */
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace linkpred
