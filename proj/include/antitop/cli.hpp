#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace antitop::cli {

/// Exit codes: predicate true or plain success, predicate false, usage or
/// input error.
inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace antitop::cli
