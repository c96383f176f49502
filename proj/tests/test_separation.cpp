#include <random>

#include "doctest.h"
#include "lcr/constructions.hpp"
#include "lcr/crossing.hpp"
#include "lcr/error.hpp"
#include "lcr/formula.hpp"
#include "lcr/separation.hpp"
#include <nlohmann/json.hpp>
#include "oracles.hpp"

using namespace lcr;

namespace {

// Any witness at all, by direct enumeration with the floating-point oracles.
bool brute_force_has_witness(const PointSet& P) {
  const int n = P.size();
  const auto hull = convex_hull(P);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    for (std::size_t j = i + 1; j < hull.size(); ++j) {
      const auto s = oracle::side_counts(P, hull[i], hull[j]);
      if (3 * std::abs(s.right - s.left) <= n - 2) return true;
    }
  }
  for (int p : hull) {
    for (int q : hull) {
      if (p == q) continue;
      for (int r = 0; r < n; ++r) {
        if (r == p || r == q) continue;
        const auto s = oracle::sector_counts(P, p, r, q);
        if (3 * std::abs(s.ccw - s.cw) <= n - 3) return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("three points: the path witness is balanced at zero") {
  const std::pair<long, long> xy[] = {{0, 0}, {1, 0}, {0, 1}};
  const auto P = make_point_set(xy);
  const auto w = find_separation_witness(P);
  CHECK(w.difference == 0);
  CHECK(w.forced_crossings() == 0);
  CHECK(w.edge_bound() == 0);
}

TEST_CASE("four points with a triangular hull have no witness") {
  const std::pair<long, long> xy[] = {{0, 0}, {6, 0}, {0, 6}, {1, 1}};
  const auto P = make_point_set(xy);
  CHECK(all_separation_witnesses(P).empty());
  CHECK_FALSE(brute_force_has_witness(P));
  CHECK_THROWS_WITH_AS(find_separation_witness(P),
                       doctest::Contains("triangle with one interior point"), Error);
}

TEST_CASE("four points in convex position: a diagonal splits 1/1") {
  const auto P = oracle::convex_set(4);
  const auto w = find_separation_witness(P);
  REQUIRE(w.is_edge());
  const auto& e = std::get<HullEdgeWitness>(w.kind);
  CHECK(e.counts == SideCounts{1, 1});
  CHECK(w.forced_crossings() == 1);
  CHECK(lemma_lower_bound(P).edge_bound == 1);
}

TEST_CASE("witness counts match the floating-point oracles") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 5 + trial % 8;
    const auto P = oracle::small_random_set(n, rng);
    const auto all = all_separation_witnesses(P);
    REQUIRE_FALSE(all.empty());
    CHECK(brute_force_has_witness(P));
    for (const auto& w : all) {
      if (w.is_edge()) {
        const auto& e = std::get<HullEdgeWitness>(w.kind);
        CHECK(e.counts == oracle::side_counts(P, e.p, e.q));
        CHECK(Rational(w.difference) <= make_rational(n - 2, 3));
      } else {
        const auto& b = std::get<HullPathWitness>(w.kind);
        CHECK(b.counts == oracle::sector_counts(P, b.p, b.r, b.q));
        CHECK(Rational(w.difference) <= make_rational(n - 3, 3));
      }
    }
    const auto cert = lemma_lower_bound(P);
    CHECK(cert.edge_bound <= cert.local_crossing_number);
    CHECK(cert.local_crossing_number >= lower_bound_class(n));
  }
}

TEST_CASE("the certificate is tight on three clusters of three") {
  const auto s = construct_three_arcs(9);
  const auto cert = lemma_lower_bound(s.points);
  CHECK(cert.local_crossing_number == 4);
  CHECK(cert.edge_bound == 4);
  CHECK(cert.edge_bound == lower_bound_class(9));
}

TEST_CASE("three-arc sets are nearly balanced at every hull path") {
  for (int n : {9, 12, 15}) {
    const auto s = construct_three_arcs(n);
    const int floor_value = (n - 3 + 2) / 3 - 1;  // ceil((n-3)/3) - 1
    CHECK(tightness_diagnostic(s.points) >= floor_value);
  }
}

TEST_CASE("tightness is symmetric under reflection") {
  const std::pair<long, long> kite[] = {{0, 0}, {4, 1}, {0, 9}, {-4, 1}, {1, 3}};
  const std::pair<long, long> mirror[] = {{0, 0}, {-4, 1}, {0, 9}, {4, 1}, {-1, 3}};
  const auto P = make_point_set(kite);
  const auto Q = make_point_set(mirror);
  CHECK(tightness_diagnostic(P) == tightness_diagnostic(Q));
  CHECK(lemma_lower_bound(P).edge_bound == lemma_lower_bound(Q).edge_bound);
}

TEST_CASE("some maximal edge touches the hull") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    CHECK(hull_endpoint_property(oracle::small_random_set(4 + trial % 9, rng)));
  }
  CHECK(hull_endpoint_property(construct_three_arcs(12).points));
}

TEST_CASE("small randomized lemma run") {
  const auto summary = run_lemma_fuzz(300, 5, 5, 12);
  CHECK(summary.instances == 300);
  CHECK(summary.ok());

  const auto with_four = run_lemma_fuzz(300, 5, 4, 4);
  CHECK(with_four.witness_failures == with_four.triangular_four_point_failures);
  CHECK(with_four.unsound_certificates == 0);
}

TEST_CASE("witness descriptions and JSON") {
  const auto w = find_separation_witness(oracle::convex_set(4));
  CHECK_FALSE(w.describe().empty());
  const auto j = to_json(w);
  CHECK(j["kind"] == "hull_edge");
  CHECK(j["threshold"] == "2/3");
}
