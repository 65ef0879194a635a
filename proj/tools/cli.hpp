#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathcover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

/// Entry point for the `pathcover` tool. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathcover::cli
