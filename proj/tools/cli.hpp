#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hrf::cli {

/// Exit codes: 0 pass, 1 mathematical failure, 2 usage or format error.
enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

/// args excludes the program name. JSON goes to out (or the -o file), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hrf::cli
