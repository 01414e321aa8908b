#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rtt {

enum ExitCode : int {
    kExitOk = 0,
    kExitOther = 1,
    kExitParse = 2,
    kExitIncompatible = 3,
    kExitSizeGuard = 4,
    kExitInfeasible = 5,
};

// args excludes the program name. Primary output goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rtt
