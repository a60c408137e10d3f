#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cha {

// sysexits-style codes plus the two verdict codes
enum ExitCode : int {
    kExitOk = 0,
    kExitRejected = 2,
    kExitUndecided = 3,
    kExitUsage = 64,
    kExitSoftware = 70,
    kExitIo = 74,
};

// args excludes the program name.
int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace cha
