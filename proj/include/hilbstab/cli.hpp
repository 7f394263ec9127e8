#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hilbstab::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,         // usage, parse or validation error
  kInapplicable = 2,  // the method does not apply to this surface
  kHorizon = 3,       // window too small for a certificate
};

/// Runs `hilbstab <subcommand> ...`; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilbstab::cli
