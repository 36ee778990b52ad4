#pragma once

#include <ostream>

namespace lrc::cli {

enum ExitCode { kOk = 0, kViolation = 1, kInputError = 2, kPrecondition = 3, kResourceCap = 4 };

// Entire command line front end; main() only forwards to this.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lrc::cli
