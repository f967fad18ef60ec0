#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "experts/bounds.hpp"

namespace experts::cli {

// Exit codes: 0 success, 2 configuration error, 3 I/O error, 4 internal
// invariant violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitInternal = 4;

int run_simulate(const std::string& config_path, const std::string& out_override,
                 std::optional<std::uint64_t> seed_override, int threads);

struct BoundsRequest {
  int theorem = 5;  // 4 or 5
  BoundParams params;
  std::string out;
};

int run_bounds(const BoundsRequest& request);

int run_plot(const std::vector<std::string>& csv_paths, const std::string& axis,
             const std::string& out);

int run_lemmas(std::int64_t cases, std::uint64_t seed);

}  // namespace experts::cli
