#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sobolev::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFail = 1,
    kExitUsage = 2,
    kExitInconclusive = 3,
};

/// Runs `sobolev <norm|eval|membership|check> ...`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sobolev::cli
