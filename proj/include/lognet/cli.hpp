#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace lognet {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
    kExitOk = 0,
    kExitNoAnswer = 1,
    kExitBadInput = 2,
    kExitPrecondition = 3,
};

/// Runs one CLI invocation; argv[0] is the program name.
int run_cli(std::span<const std::string> argv, std::ostream& out, std::ostream& err);

}  // namespace lognet
