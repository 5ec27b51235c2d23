#pragma once

/// \file
/// \brief The `miquel` command line, callable in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace miquel {

enum ExitCode : int {
  kExitOk = 0,
  kExitGeometry = 1,
  kExitUsage = 2,
  kExitVerifyFailed = 3,
};

/// argv[0] is the program name. Subcommands: centers, classify, miquel,
/// family, chain, verify, figure.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace miquel
