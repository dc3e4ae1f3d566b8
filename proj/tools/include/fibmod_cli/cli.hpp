#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fibmod::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kIdentityFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kPreconditionFailed = 3;

/// Runs one command line (args[0] is the program name).  Results go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibmod::cli
