#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ucf::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPropertyFalse = 1,
  kUsageError = 2,
};

/// Runs one command line. `args` excludes the program name. FILE arguments
/// equal to "-" read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ucf::cli
