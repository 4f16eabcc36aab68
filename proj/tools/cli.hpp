#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cspin/error.hpp"

namespace cspin::cli {

/// Process exit status for a library error.
int exit_code(ErrorCode code);

/*!
 * Runs the command line `args` (without the program name), writing the
 * report to `out` or to the --output file and diagnostics to `err`.
 * Returns the process exit status.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cspin::cli
