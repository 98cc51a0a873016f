#pragma once

#include <iosfwd>

#include "ringcat/config.hpp"

namespace ringcat {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitConfig = 2,
  kExitNumerical = 3,
};

/// Runs the configured command and writes its CSV table to `out`. Output depends only
/// on the configuration, never on `threads`.
void run(const RunConfig& config, std::ostream& out);

/// Runs into `config.out` (standard output when empty) and maps failures to exit codes,
/// printing a diagnostic to `err`.
int run_command(const RunConfig& config, std::ostream& err);

}  // namespace ringcat
