#pragma once

#include <iosfwd>

namespace psu4 {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kIo = 3 };

/// Entry point of the psu4d tool, with the streams made explicit for tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace psu4
