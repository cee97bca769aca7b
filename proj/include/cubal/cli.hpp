#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubal {

/**
 * Batch command-line driver.
 *
 * `args` is the argument list without the program name.  Human-readable
 * output goes to `out` (suppressed by --quiet), diagnostics to `err`, and
 * --json <path> additionally writes the machine-readable report.
 *
 * Returns the process exit code: 0 when every check passed, 1 when some
 * check or validation failed, 2 on unusable input (unknown command, file
 * not readable, parse error, kind mismatch).
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubal
