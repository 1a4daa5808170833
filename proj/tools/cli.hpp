#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace collatz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitDomain = 4;

inline constexpr unsigned long kDefaultCap = 100'000;

/// Runs one command line (without the program name). cap_env is the value
/// of COLLATZ_CAP, if set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& cap_env = std::nullopt);

}  // namespace collatz::cli
