#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lefschetz::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name; input path "-"
/// reads from `in`. Reports are key: value lines on `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace lefschetz::cli
