#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qtutte::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2 };

// Runs one subcommand. `args` excludes the program name. The report goes to
// `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qtutte::cli
