#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irrcert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name).
/// Exit 0: certificate produced, verification passed or factorization done.
/// Exit 1: criterion failed, no witness, verification failed or oracle refused.
/// Exit 2: usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace irrcert::cli
