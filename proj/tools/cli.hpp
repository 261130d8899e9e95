#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace landau::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kDomainRefusal = 2,
  kWitnessRefused = 3,
  kUsage = 64,
  kInvalidInput = 65,
};

/// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace landau::cli
