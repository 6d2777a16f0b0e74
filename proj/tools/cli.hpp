#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qdet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind `qdet-lab`. `args` excludes the program name.
/// `seed_env` is the value of QDETLAB_SEED, if set; it replaces the default
/// seed but an explicit --seed still wins.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& seed_env = std::nullopt);

}  // namespace qdet::cli
