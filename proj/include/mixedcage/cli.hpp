#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mixedcage::cli {

// Process exit codes.
enum ExitCode : int {
  kPass = 0,           // success or positive verdict
  kFail = 1,           // negative verdict (FAIL, not isomorphic, nothing found)
  kUsage = 2,          // bad flags or arguments
  kInput = 3,          // unreadable file or malformed input
  kBudgetExceeded = 4, // search stopped by a node or time budget
  kInternal = 5,       // anything else
};

// Runs one command line (args excludes the program name). FILE arguments
// equal to "-" read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace mixedcage::cli
