#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace actbij {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadInput = 2;

// args[0] is the program name. Tables go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace actbij
