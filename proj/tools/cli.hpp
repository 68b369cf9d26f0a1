#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace epg::cli {

// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kInconclusive = 3,
};

// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace epg::cli
