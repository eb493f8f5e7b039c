#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace entroscope::cli {

/// Exit codes.
enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kInapplicable = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entroscope::cli
