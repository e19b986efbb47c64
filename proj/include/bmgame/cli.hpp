#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bmgame {

// Exit statuses shared by every subcommand.
enum ExitStatus : int {
    kExitOk = 0,
    kExitInputError = 2,
    kExitViolation = 3,
    kExitBudget = 4,
    kExitInternal = 5,
};

// Full command-line entry point, separated from main() so tests can drive
// it in-process. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bmgame
