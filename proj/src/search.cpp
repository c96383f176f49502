#include "lcr/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <nlohmann/json.hpp>
#include <optional>
#include <thread>

#include "lcr/constructions.hpp"
#include "lcr/crossing.hpp"
#include "lcr/error.hpp"
#include "lcr/formula.hpp"

namespace lcr {

void validate(const SearchConfig& config) {
  if (config.n < 3) throw Error("search needs n >= 3");
  if (config.target < 0) throw Error("search target must be nonnegative");
  if (config.restarts < 1 || config.moves_per_restart < 1) {
    throw Error("restarts and moves must be positive");
  }
  if (config.grid_bound < 16 || config.grid_bound > (std::int64_t{1} << 40)) {
    throw Error("grid bound must lie in [16, 2^40]");
  }
}

int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LCR_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

bool collinear_or_equal(const GridPoint& a, const GridPoint& b, const GridPoint& c) {
  return orient(a, b, c) == Orientation::Collinear;
}

bool fits(const std::vector<GridPoint>& pts, const GridPoint& cand) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].x == cand.x && pts[i].y == cand.y) return false;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (collinear_or_equal(pts[i], pts[j], cand)) return false;
    }
  }
  return true;
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// The calibrated three-arc set rounded onto the grid, then repaired into general position.
std::vector<GridPoint> three_arc_seed(int n, std::int64_t bound, std::mt19937_64& rng) {
  const auto arcs = construct_three_arcs(n);
  // Arc coordinates lie within [-3, 3]^2.
  const Rational scale = make_rational(static_cast<long>(bound / 8));
  const Rational shift = make_rational(4);
  std::vector<GridPoint> out;
  for (const auto& p : arcs.points) {
    auto round = [&](const Rational& v) {
      mpz_class r;
      const Rational t = (v + shift) * scale + make_rational(1, 2);
      mpz_fdiv_q(r.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
      return static_cast<std::int64_t>(r.get_si());
    };
    GridPoint g{p.id, round(p.x), round(p.y)};
    while (!fits(out, g)) {
      g.x = std::clamp<std::int64_t>(g.x + uniform(rng, -2, 2), 0, bound - 1);
      g.y = std::clamp<std::int64_t>(g.y + uniform(rng, -2, 2), 0, bound - 1);
    }
    out.push_back(g);
  }
  return out;
}

struct Score {
  int max = 0;
  int at_max = 0;

  friend auto operator<=>(const Score&, const Score&) = default;
};

Score score(const CrossingProfile& profile) {
  Score s;
  for (int c : profile.counts()) {
    if (c > s.max) {
      s.max = c;
      s.at_max = 1;
    } else if (c == s.max) {
      ++s.at_max;
    }
  }
  return s;
}

struct RestartOutcome {
  std::vector<GridPoint> best;
  int best_lcr = std::numeric_limits<int>::max();
  bool achieved = false;
  bool cancelled = false;
  std::int64_t iterations = 0;
};

class Climber {
 public:
  Climber(const SearchConfig& cfg, int restart, const std::atomic<int>& cutoff)
      : cfg_(cfg), restart_(restart), cutoff_(cutoff), floor_(lower_bound_class(cfg.n)) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    rng_.seed(seq);
  }

  RestartOutcome run() {
    pts_ = restart_ % 2 == 0 ? three_arc_seed(cfg_.n, cfg_.grid_bound, rng_)
                             : random_general_position(cfg_.n, rng_, cfg_.grid_bound);
    table_ = OrientationTable(std::span<const GridPoint>(pts_));
    profile_ = crossing_profile(table_);
    Score current = score(profile_);
    RestartOutcome out;
    record(current, out);

    std::int64_t radius = std::max<std::int64_t>(1, cfg_.grid_bound / 8);
    const int halve_every = std::max(1, cfg_.moves_per_restart / 8);
    int accepted = 0;
    for (int move = 0; move < cfg_.moves_per_restart && !out.achieved; ++move) {
      if ((move & 255) == 0 && cutoff_.load(std::memory_order_relaxed) < restart_) {
        out.cancelled = true;
        break;
      }
      ++out.iterations;
      const int i = static_cast<int>(uniform(rng_, 0, cfg_.n - 1));
      const GridPoint old = pts_[static_cast<std::size_t>(i)];
      GridPoint cand = old;
      cand.x = std::clamp<std::int64_t>(old.x + uniform(rng_, -radius, radius), 0, cfg_.grid_bound - 1);
      cand.y = std::clamp<std::int64_t>(old.y + uniform(rng_, -radius, radius), 0, cfg_.grid_bound - 1);
      if (cand == old) continue;

      accumulate_vertex_crossings(table_, i, -1, profile_);
      place(i, cand);
      if (table_.has_collinear_with(i)) {
        place(i, old);
        accumulate_vertex_crossings(table_, i, +1, profile_);
        continue;
      }
      accumulate_vertex_crossings(table_, i, +1, profile_);
      const Score next = score(profile_);
      if (next.max < floor_) throw Error("drawing below the class lower bound: bug");
      if (next <= current) {
        current = next;
        record(current, out);
        if (++accepted % halve_every == 0) radius = std::max<std::int64_t>(1, radius / 2);
      } else {
        accumulate_vertex_crossings(table_, i, -1, profile_);
        place(i, old);
        accumulate_vertex_crossings(table_, i, +1, profile_);
      }
    }
    return out;
  }

 private:
  void place(int i, const GridPoint& g) {
    pts_[static_cast<std::size_t>(i)] = g;
    table_.refresh(pts_, i);
  }

  void record(const Score& s, RestartOutcome& out) {
    if (s.max < out.best_lcr) {
      out.best_lcr = s.max;
      out.best = pts_;
    }
    if (s.max <= cfg_.target) out.achieved = true;
  }

  const SearchConfig& cfg_;
  int restart_;
  const std::atomic<int>& cutoff_;
  std::int64_t floor_;
  std::mt19937_64 rng_;
  std::vector<GridPoint> pts_;
  OrientationTable table_;
  CrossingProfile profile_;
};

}  // namespace

std::vector<GridPoint> random_general_position(int n, std::mt19937_64& rng, std::int64_t bound) {
  std::vector<GridPoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  while (static_cast<int>(pts.size()) < n) {
    GridPoint cand{static_cast<int>(pts.size()), uniform(rng, 0, bound - 1), uniform(rng, 0, bound - 1)};
    if (fits(pts, cand)) pts.push_back(cand);
  }
  return pts;
}

SearchResult search_witness(const SearchConfig& config) {
  validate(config);
  const int restarts = config.restarts;
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(restarts));
  std::atomic<int> next{0};
  std::atomic<int> cutoff{std::numeric_limits<int>::max()};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  auto worker = [&] {
    try {
      for (int r = next++; r < restarts && !failed; r = next++) {
        if (r > cutoff.load()) continue;
        auto outcome = Climber(config, r, cutoff).run();
        if (outcome.achieved) {
          int seen = cutoff.load();
          while (r < seen && !cutoff.compare_exchange_weak(seen, r)) {
          }
        }
        outcomes[static_cast<std::size_t>(r)] = std::move(outcome);
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  const int threads = std::min(worker_count(config.threads), restarts);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Restarts at or below the final cutoff all ran to their own end.
  const int last = std::min(restarts - 1, cutoff.load());
  int winner = -1;
  std::int64_t iterations = 0;
  for (int r = 0; r <= last; ++r) {
    const auto& o = outcomes[static_cast<std::size_t>(r)];
    iterations += o.iterations;
    if (winner < 0 || o.best_lcr < outcomes[static_cast<std::size_t>(winner)].best_lcr) winner = r;
  }
  if (cutoff.load() < restarts) winner = cutoff.load();

  const auto& best = outcomes[static_cast<std::size_t>(winner)];
  SearchResult result;
  result.best = to_point_set(best.best);
  result.best_lcr = best.best_lcr;
  result.restart_index = winner;
  result.iterations_used = iterations;
  result.achieved_target = best.achieved;
  if (local_crossing_number(result.best) != result.best_lcr) {
    throw Error("search witness failed exact re-verification");
  }
  return result;
}

int verify_floor_by_sampling(int n, int samples, std::uint64_t seed) {
  if (n < 3) throw Error("sampling needs n >= 3");
  if (samples < 1) throw Error("sampling needs at least one sample");
  std::mt19937_64 rng(seed);
  int best = std::numeric_limits<int>::max();
  for (int s = 0; s < samples; ++s) {
    const auto pts = random_general_position(n, rng);
    const OrientationTable table{std::span<const GridPoint>(pts)};
    best = std::min(best, crossing_profile(table).local_crossing_number());
  }
  return best;
}

nlohmann::json to_json(const SearchConfig& config, const SearchResult& result) {
  return {{"n", config.n},
          {"target", config.target},
          {"seed", config.seed},
          {"restarts", config.restarts},
          {"moves_per_restart", config.moves_per_restart},
          {"grid_bound", config.grid_bound},
          {"best_lcr", result.best_lcr},
          {"achieved_target", result.achieved_target},
          {"iterations_used", result.iterations_used},
          {"restart_index", result.restart_index},
          {"formula_value", lcr_formula(config.n).value}};
}

}  // namespace lcr
