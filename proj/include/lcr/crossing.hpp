#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lcr/geometry.hpp"

namespace lcr {

/// Unordered vertex pair with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b);

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Position of an edge in canonical order (0,1), (0,2), ..., (1,2), ...
inline std::size_t edge_index(int n, int u, int v) {
  // Row u starts after u*(2n - u - 1)/2 entries.
  return static_cast<std::size_t>(u) * (2 * static_cast<std::size_t>(n) - u - 1) / 2 +
         static_cast<std::size_t>(v - u - 1);
}

/// Per-edge crossing counts of the straight-line complete graph on n points.
class CrossingProfile {
 public:
  CrossingProfile() = default;
  explicit CrossingProfile(int n);

  int n() const { return n_; }
  std::size_t edge_count() const { return counts_.size(); }

  int count(Edge e) const { return counts_[edge_index(n_, e.u, e.v)]; }
  int& count_ref(int u, int v) { return counts_[edge_index(n_, u, v)]; }
  const std::vector<int>& counts() const { return counts_; }

  /// Edges in canonical order.
  std::vector<Edge> edges() const;

  /// lc(D): the largest per-edge count (0 when there are no edges).
  int local_crossing_number() const;
  /// Number of crossing pairs of edges.
  std::int64_t total_crossings() const;
  /// Edges whose count equals the maximum.
  std::vector<Edge> maximal_edges() const;

  friend bool operator==(const CrossingProfile&, const CrossingProfile&) = default;

 private:
  int n_ = 0;
  std::vector<int> counts_;
};

/// Adds (sign = +1) or removes (sign = -1) the crossings of every pair of
/// disjoint edges that involves vertex `v`. Used for incremental updates.
void accumulate_vertex_crossings(const OrientationTable& table, int v, int sign,
                                 CrossingProfile& profile);

CrossingProfile crossing_profile(const OrientationTable& table);
CrossingProfile crossing_profile(const PointSet& points);

/// Number of 4-point subsets in convex position, counted by triangle
/// containment. Equals total_crossings in general position.
std::int64_t count_convex_quadrilaterals(const OrientationTable& table);

int edge_crossings(const PointSet& points, Edge e);
int local_crossing_number(const PointSet& points);
std::int64_t total_crossings(const PointSet& points);

/// {"n", "edges": [{"u","v","crossings"}], "lcr", "total"}
nlohmann::json to_json(const CrossingProfile& profile);

}  // namespace lcr
