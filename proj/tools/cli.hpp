#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ectarget::cli {

enum ExitCode : int {
    kOk = 0,
    kNegative = 1,  // infeasible / none / counterexample / not verified
    kUsage = 2,
    kGuard = 3,
    kInternal = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ectarget::cli
