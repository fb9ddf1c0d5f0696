#ifndef QREP_CLI_HPP_
#define QREP_CLI_HPP_

#include <string>
#include <vector>

#include "qrep/json_io.hpp"

namespace qrep::cli {

  enum ExitCode : int { Success = 0, Negative = 1, InputError = 2, ResourceError = 3 };

  struct CommandResult {
    int            exit_code = Success;
    json_io::json  report;
    std::string    summary;  // one line for stderr
  };

  // args excludes the program name.  Never throws.
  CommandResult run(std::vector<std::string> const& args);

}  // namespace qrep::cli

#endif  // QREP_CLI_HPP_
