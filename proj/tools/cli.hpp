#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ekr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitUnknownCommand = 64;

// Runs one invocation. `args` excludes the program name. Structured output
// (including error objects) goes to `out`, a one-line diagnostic to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ekr::cli
