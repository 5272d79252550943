#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace transit::cli {

/// Exit codes of `run`.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kGuard = 2;  // too large, inapplicable, unsupported agent count

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace transit::cli
