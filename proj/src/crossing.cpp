#include "lcr/crossing.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "lcr/error.hpp"

namespace lcr {

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw Error("edge endpoints must differ");
}

CrossingProfile::CrossingProfile(int n)
    : n_(n), counts_(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2, 0) {}

std::vector<Edge> CrossingProfile::edges() const {
  std::vector<Edge> out;
  out.reserve(counts_.size());
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) out.emplace_back(u, v);
  }
  return out;
}

int CrossingProfile::local_crossing_number() const {
  return counts_.empty() ? 0 : *std::max_element(counts_.begin(), counts_.end());
}

std::int64_t CrossingProfile::total_crossings() const {
  std::int64_t sum = 0;
  for (int c : counts_) sum += c;
  return sum / 2;
}

std::vector<Edge> CrossingProfile::maximal_edges() const {
  const int best = local_crossing_number();
  std::vector<Edge> out;
  for (const Edge& e : edges()) {
    if (count(e) == best) out.push_back(e);
  }
  return out;
}

namespace {

// Tests the pair {ab, cd} and bumps both edges when they cross.
inline void tally(const OrientationTable& t, int a, int b, int c, int d, int sign,
                  CrossingProfile& profile) {
  if (t.crosses(a, b, c, d)) {
    profile.count_ref(std::min(a, b), std::max(a, b)) += sign;
    profile.count_ref(std::min(c, d), std::max(c, d)) += sign;
  }
}

}  // namespace

void accumulate_vertex_crossings(const OrientationTable& table, int v, int sign,
                                 CrossingProfile& profile) {
  const int n = table.size();
  for (int a = 0; a < n; ++a) {
    if (a == v) continue;
    for (int b = a + 1; b < n; ++b) {
      if (b == v) continue;
      for (int c = b + 1; c < n; ++c) {
        if (c == v) continue;
        tally(table, v, a, b, c, sign, profile);
        tally(table, v, b, a, c, sign, profile);
        tally(table, v, c, a, b, sign, profile);
      }
    }
  }
}

CrossingProfile crossing_profile(const OrientationTable& table) {
  const int n = table.size();
  CrossingProfile profile(n);
  // Every pair of disjoint edges spans exactly one 4-subset and is one of its
  // three perfect matchings, so each pair is tested once.
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int d = c + 1; d < n; ++d) {
          tally(table, a, b, c, d, 1, profile);
          tally(table, a, c, b, d, 1, profile);
          tally(table, a, d, b, c, 1, profile);
        }
      }
    }
  }
  return profile;
}

CrossingProfile crossing_profile(const PointSet& points) {
  return crossing_profile(OrientationTable(points));
}

std::int64_t count_convex_quadrilaterals(const OrientationTable& t) {
  const int n = t.size();
  auto inside = [&](int a, int b, int c, int d) {
    const int s = t.sign(a, b, d);
    return s == t.sign(b, c, d) && s == t.sign(c, a, d);
  };
  std::int64_t count = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int d = c + 1; d < n; ++d) {
          if (!inside(a, b, c, d) && !inside(a, b, d, c) && !inside(a, c, d, b) &&
              !inside(b, c, d, a)) {
            ++count;
          }
        }
      }
    }
  }
  return count;
}

int edge_crossings(const PointSet& points, Edge e) {
  check_ids(points, {e.u, e.v});
  const Point& a = points[e.u];
  const Point& b = points[e.v];
  int count = 0;
  for (int c = 0; c < points.size(); ++c) {
    if (c == e.u || c == e.v) continue;
    for (int d = c + 1; d < points.size(); ++d) {
      if (d == e.u || d == e.v) continue;
      if (segments_cross(a, b, points[c], points[d])) ++count;
    }
  }
  return count;
}

int local_crossing_number(const PointSet& points) {
  return crossing_profile(points).local_crossing_number();
}

std::int64_t total_crossings(const PointSet& points) {
  return crossing_profile(points).total_crossings();
}

nlohmann::json to_json(const CrossingProfile& profile) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : profile.edges()) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"crossings", profile.count(e)}});
  }
  return {{"n", profile.n()},
          {"edges", std::move(edges)},
          {"lcr", profile.local_crossing_number()},
          {"total", profile.total_crossings()}};
}

}  // namespace lcr
