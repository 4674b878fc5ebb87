#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace maxwell::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNumericalFailure = 1;
inline constexpr int kUsageError = 2;

/// Entry point of the maxwell_eigen tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Seed used when --seed is absent: MAXWELL_EIGEN_SEED if set, else `fallback`.
std::uint64_t default_seed(std::uint64_t fallback);

}  // namespace maxwell::cli
