// cli.hpp - entry point of the chipfire command-line tool.
#ifndef CHIPFIRE_CLI_CLI_HPP
#define CHIPFIRE_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace chipfire::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,  // unreadable or invalid input data
  kUsage = 2,
  kVerifyFailed = 3,
  kDiverged = 4,
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chipfire::cli

#endif  // CHIPFIRE_CLI_CLI_HPP
