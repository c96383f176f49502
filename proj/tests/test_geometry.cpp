#include <algorithm>
#include <random>

#include "doctest.h"
#include "lcr/error.hpp"
#include "lcr/geometry.hpp"
#include "oracles.hpp"

using namespace lcr;

namespace {

Point pt(int id, long x, long y) { return Point{id, Rational(x), Rational(y)}; }

std::vector<int> rotate_to_min(std::vector<int> cycle) {
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}

}  // namespace

TEST_CASE("orient on the basic triangles") {
  CHECK(orient(pt(0, 0, 0), pt(1, 1, 0), pt(2, 0, 1)) == Orientation::Counterclockwise);
  CHECK(orient(pt(0, 0, 0), pt(1, 1, 0), pt(2, 2, 0)) == Orientation::Collinear);
  CHECK(orient(pt(0, 0, 0), pt(1, 0, 1), pt(2, 1, 0)) == Orientation::Clockwise);
}

TEST_CASE("orient on the integer grid matches the rational kernel") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> c(-(1LL << 40), 1LL << 40);
  for (int i = 0; i < 2000; ++i) {
    GridPoint a{0, c(rng), c(rng)}, b{1, c(rng), c(rng)}, d{2, c(rng), c(rng)};
    const auto exact = orient(Point{0, Rational(static_cast<long>(a.x)), Rational(static_cast<long>(a.y))},
                              Point{1, Rational(static_cast<long>(b.x)), Rational(static_cast<long>(b.y))},
                              Point{2, Rational(static_cast<long>(d.x)), Rational(static_cast<long>(d.y))});
    CHECK(orient(a, b, d) == exact);
  }
}

TEST_CASE("is_general_position") {
  const std::pair<long, long> ok[] = {{0, 0}, {1, 0}, {0, 1}};
  const std::pair<long, long> line[] = {{0, 0}, {1, 0}, {2, 0}};
  const std::pair<long, long> dup[] = {{0, 0}, {1, 1}, {1, 1}};
  CHECK(is_general_position(make_point_set(ok)));
  CHECK_FALSE(is_general_position(make_point_set(line)));
  CHECK_FALSE(is_general_position(make_point_set(dup)));
  CHECK(*general_position_violation(make_point_set(line)) == "collinear triple: ids 0, 1, 2");
  CHECK(*general_position_violation(make_point_set(dup)) == "duplicate point: ids 1 and 2");
}

TEST_CASE("segments_cross") {
  CHECK(segments_cross(pt(0, 0, 0), pt(1, 2, 2), pt(2, 0, 2), pt(3, 2, 0)));
  CHECK_FALSE(segments_cross(pt(0, 0, 0), pt(1, 1, 0), pt(2, 0, 1), pt(3, 1, 1)));
  // Exact signs: orient((0,0),(3,1),(1,2)) = 5 and orient(..,(2,3)) = 7 agree.
  CHECK_FALSE(segments_cross(pt(0, 0, 0), pt(1, 3, 1), pt(2, 1, 2), pt(3, 2, 3)));
  CHECK_THROWS_WITH_AS(segments_cross(pt(0, 0, 0), pt(1, 2, 2), pt(0, 0, 0), pt(3, 2, 0)),
                       "segments share an endpoint; adjacency is not a crossing", Error);
}

TEST_CASE("segments_cross agrees with exact parametric intersection and is symmetric") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto P = oracle::small_random_set(4, rng);
    const bool c = segments_cross(P[0], P[1], P[2], P[3]);
    CHECK(c == oracle::segments_intersect(P[0], P[1], P[2], P[3]));
    CHECK(c == segments_cross(P[2], P[3], P[0], P[1]));
    CHECK(c == segments_cross(P[1], P[0], P[3], P[2]));
  }
}

TEST_CASE("convex_hull") {
  const std::pair<long, long> tri[] = {{0, 0}, {4, 0}, {0, 4}, {1, 1}};
  CHECK(convex_hull(make_point_set(tri)) == std::vector<int>{0, 1, 2});
  const std::pair<long, long> quad[] = {{2, 2}, {0, 2}, {0, 0}, {2, 0}};
  CHECK(convex_hull(make_point_set(quad)) == std::vector<int>{2, 3, 0, 1});
  const std::pair<long, long> two[] = {{0, 0}, {1, 0}};
  CHECK_THROWS_AS(convex_hull(make_point_set(two)), Error);
}

TEST_CASE("convex_hull: interior points lie strictly inside and input order does not matter") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto P = oracle::small_random_set(9, rng);
    const auto hull = convex_hull(P);
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const auto& a = P[hull[i]];
      const auto& b = P[hull[(i + 1) % hull.size()]];
      for (const auto& x : P) {
        if (x.id == a.id || x.id == b.id) continue;
        CHECK(orient(a, b, x) == Orientation::Counterclockwise);
      }
    }
    // Reverse the input; map ids back and compare as cycles.
    PointSet R;
    for (int i = P.size() - 1; i >= 0; --i) R.add(P[i].x, P[i].y);
    auto back = convex_hull(R);
    for (int& id : back) id = P.size() - 1 - id;
    CHECK(rotate_to_min(back) == rotate_to_min(hull));
  }
}

TEST_CASE("side_counts") {
  const std::pair<long, long> diamond[] = {{0, 0}, {2, 0}, {1, 1}, {1, -1}};
  const auto P = make_point_set(diamond);
  CHECK(side_counts(P, P[0], P[1]) == SideCounts{1, 1});
  const auto C = oracle::convex_set(5);
  const auto hull_edge = side_counts(C, C[0], C[1]);
  CHECK(hull_edge.right + hull_edge.left == 3);
  CHECK((hull_edge.right == 0 || hull_edge.left == 0));
  CHECK_THROWS_AS(side_counts(P, P[0], P[0]), Error);
}

TEST_CASE("side_counts matches a brute-force tally and swaps under reversal") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto P = oracle::small_random_set(10, rng);
    for (int p = 0; p < 10; ++p) {
      for (int q = 0; q < 10; ++q) {
        if (p == q) continue;
        const auto c = side_counts(P, P[p], P[q]);
        CHECK(c == oracle::side_counts(P, p, q));
        CHECK(c.right + c.left == 8);
        CHECK(side_counts(P, P[q], P[p]) == SideCounts{c.left, c.right});
      }
    }
  }
}

TEST_CASE("sector_counts") {
  // p=(1,0), r=(0,0), q=(-1,1/16), x=(0,1), y=(0,-1).
  PointSet P;
  P.add(1, 0);
  P.add(0, 0);
  P.add(-1, make_rational(1, 16));
  P.add(0, 1);
  P.add(0, -1);
  CHECK(sector_counts(P, P[0], P[1], P[2]) == SectorCounts{1, 1});
  // Reflex sector: from rq counterclockwise round to rp holds y only.
  CHECK(sector_counts(P, P[2], P[1], P[0]) == SectorCounts{1, 1});
  CHECK_THROWS_AS(sector_counts(P, P[0], P[1], P[0]), Error);
  PointSet L;
  L.add(-1, 0);
  L.add(0, 0);
  L.add(1, 0);
  CHECK_THROWS_AS(sector_counts(L, L[0], L[1], L[2]), Error);
}

TEST_CASE("sector_counts matches an angular sweep, including reflex sectors") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> pick(0, 11);
  int reflex = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto P = oracle::small_random_set(12, rng);
    const OrientationTable table(P);
    int p = pick(rng), r = pick(rng), q = pick(rng);
    if (p == r || r == q || p == q) continue;
    const auto c = sector_counts(P, P[p], P[r], P[q]);
    CHECK(c == oracle::sector_counts(P, p, r, q));
    CHECK(c == table.sector_counts(p, r, q));
    CHECK(c.ccw + c.cw == 9);
    if (table.sign(r, p, q) < 0) ++reflex;
  }
  CHECK(reflex > 50);
}

TEST_CASE("predicates are invariant under positive rational scaling") {
  std::mt19937_64 rng(13);
  const Rational s = make_rational(7, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto P = oracle::small_random_set(8, rng);
    PointSet S;
    for (const auto& p : P) S.add(p.x * s, p.y * s);
    CHECK(convex_hull(P) == convex_hull(S));
    for (int i = 0; i < 8; ++i) {
      for (int j = i + 1; j < 8; ++j) {
        CHECK(side_counts(P, P[i], P[j]) == side_counts(S, S[i], S[j]));
        for (int k = 0; k < 8; ++k) {
          if (k == i || k == j) continue;
          CHECK(orient(P[i], P[j], P[k]) == orient(S[i], S[j], S[k]));
          CHECK(orient(P[i], P[j], P[k]) == static_cast<Orientation>(-static_cast<int>(orient(P[j], P[i], P[k]))));
        }
      }
    }
  }
}

TEST_CASE("OrientationTable refresh after moving a grid point") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> c(0, 1000);
  std::vector<GridPoint> pts;
  for (int i = 0; i < 9; ++i) pts.push_back({i, c(rng), c(rng)});
  OrientationTable table{std::span<const GridPoint>(pts)};
  for (int step = 0; step < 50; ++step) {
    const int i = step % 9;
    pts[static_cast<std::size_t>(i)].x = c(rng);
    pts[static_cast<std::size_t>(i)].y = c(rng);
    table.refresh(pts, i);
    const OrientationTable fresh{std::span<const GridPoint>(pts)};
    for (int a = 0; a < 9; ++a)
      for (int b = 0; b < 9; ++b)
        for (int d = 0; d < 9; ++d) CHECK(table.sign(a, b, d) == fresh.sign(a, b, d));
  }
}
