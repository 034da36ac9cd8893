#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace separ::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kBadHex = 3,
  kBadLength = 4,
  kPadding = 5,
  kIo = 6,
  kVectorMismatch = 7,
};

// Runs one command line. args excludes the program name. Bulk output goes to
// out unless --out names a file; diagnostics go to err.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace separ::cli
