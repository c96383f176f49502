#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lcr/geometry.hpp"

namespace lcr {

inline constexpr std::uint64_t kDefaultSeed = 20170101;
inline constexpr std::int64_t kDefaultGridBound = std::int64_t{1} << 20;

struct SearchConfig {
  int n = 0;
  int target = 0;
  std::uint64_t seed = kDefaultSeed;
  int restarts = 64;
  int moves_per_restart = 20000;
  std::int64_t grid_bound = kDefaultGridBound;  ///< coordinates lie in [0, grid_bound)
  int threads = 0;                              ///< 0: LCR_THREADS or hardware concurrency
};

struct SearchResult {
  PointSet best;
  int best_lcr = 0;
  bool achieved_target = false;
  std::int64_t iterations_used = 0;
  int restart_index = -1;  ///< restart that produced `best`
};

/// Throws Error unless every count is positive and n >= 3.
void validate(const SearchConfig& config);

/// Hill climbing with random restarts over integer-grid drawings. Each restart
/// owns an RNG stream derived from (seed, restart index); the result is the
/// lowest-index restart that reaches the target, else the lowest local
/// crossing number (ties to the lower index). Identical configs give identical
/// results for any thread count.
SearchResult search_witness(const SearchConfig& config);

/// n points uniform in [0, bound)^2, each resampled until no duplicate or collinear triple appears.
std::vector<GridPoint> random_general_position(int n, std::mt19937_64& rng,
                                               std::int64_t bound = kDefaultGridBound);

/// Minimum local crossing number over `samples` random general-position sets.
int verify_floor_by_sampling(int n, int samples, std::uint64_t seed);

/// Worker count: `requested` if positive, else LCR_THREADS if set and positive,
/// else std::thread::hardware_concurrency().
int worker_count(int requested = 0);

nlohmann::json to_json(const SearchConfig& config, const SearchResult& result);

}  // namespace lcr
