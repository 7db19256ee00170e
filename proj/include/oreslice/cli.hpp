#ifndef ORESLICE_CLI_HPP_
#define ORESLICE_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace oreslice {

  // Stable exit codes.
  enum ExitCode : int {
    exit_ok           = 0,
    exit_verification = 1,
    exit_usage        = 2,
    exit_exhausted    = 3,
  };

  // Runs one command line (without the program name).
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

}  // namespace oreslice

#endif  // ORESLICE_CLI_HPP_
