#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropical::cli {

enum ExitCode : int { kOk = 0, kAnalysisError = 1, kInputError = 2 };

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace tropical::cli
