#include "lcr/geometry.hpp"

#include <algorithm>

#include "lcr/error.hpp"

namespace lcr {

int PointSet::add(Rational x, Rational y) {
  const int id = size();
  points_.push_back(Point{id, std::move(x), std::move(y)});
  return id;
}

PointSet make_point_set(std::span<const std::pair<long, long>> coords) {
  PointSet set;
  for (const auto& [x, y] : coords) set.add(Rational(x), Rational(y));
  return set;
}

PointSet to_point_set(std::span<const GridPoint> grid) {
  PointSet set;
  for (const auto& g : grid) {
    set.add(Rational(static_cast<long>(g.x)), Rational(static_cast<long>(g.y)));
  }
  return set;
}

std::optional<std::string> general_position_violation(const PointSet& points) {
  const int n = points.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (points[i].x == points[j].x && points[i].y == points[j].y) {
        return "duplicate point: ids " + std::to_string(i) + " and " + std::to_string(j);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (orient(points[i], points[j], points[k]) == Orientation::Collinear) {
          return "collinear triple: ids " + std::to_string(i) + ", " + std::to_string(j) + ", " +
                 std::to_string(k);
        }
      }
    }
  }
  return std::nullopt;
}

bool is_general_position(const PointSet& points) {
  return !general_position_violation(points).has_value();
}

void check_ids(const PointSet& points, std::initializer_list<int> ids) {
  for (int id : ids) {
    if (id < 0 || id >= points.size()) {
      throw Error("point id " + std::to_string(id) + " out of range [0, " +
                  std::to_string(points.size()) + ")");
    }
  }
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (a.id == c.id || a.id == d.id || b.id == c.id || b.id == d.id) {
    throw Error("segments share an endpoint; adjacency is not a crossing");
  }
  const auto abc = orient(a, b, c);
  const auto abd = orient(a, b, d);
  const auto cda = orient(c, d, a);
  const auto cdb = orient(c, d, b);
  if (abc == Orientation::Collinear || abd == Orientation::Collinear ||
      cda == Orientation::Collinear || cdb == Orientation::Collinear) {
    throw Error("segment endpoints are not in general position");
  }
  return abc != abd && cda != cdb;
}

std::vector<int> convex_hull(const PointSet& points) {
  const int n = points.size();
  if (n < 3) throw Error("convex hull needs at least 3 points");
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (points[a].x != points[b].x) return points[a].x < points[b].x;
    return points[a].y < points[b].y;
  });

  // Andrew's monotone chain; strict left turns only.
  std::vector<int> hull;
  hull.reserve(static_cast<std::size_t>(2 * n));
  auto left_turn = [&](int a, int b, int c) {
    return orient(points[a], points[b], points[c]) == Orientation::Counterclockwise;
  };
  for (int id : order) {
    while (hull.size() >= 2 && !left_turn(hull[hull.size() - 2], hull.back(), id)) hull.pop_back();
    hull.push_back(id);
  }
  const std::size_t lower = hull.size() + 1;
  for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {
    while (hull.size() >= lower && !left_turn(hull[hull.size() - 2], hull.back(), *it)) {
      hull.pop_back();
    }
    hull.push_back(*it);
  }
  hull.pop_back();
  return hull;
}

SideCounts side_counts(const PointSet& points, const Point& p, const Point& q) {
  check_ids(points, {p.id, q.id});
  if (p.id == q.id) throw Error("side counts need two distinct points");
  SideCounts counts;
  for (const auto& x : points) {
    if (x.id == p.id || x.id == q.id) continue;
    switch (orient(p, q, x)) {
      case Orientation::Clockwise: ++counts.right; break;
      case Orientation::Counterclockwise: ++counts.left; break;
      case Orientation::Collinear: break;
    }
  }
  return counts;
}

SectorCounts sector_counts(const PointSet& points, const Point& p, const Point& r, const Point& q) {
  check_ids(points, {p.id, r.id, q.id});
  const int rpq = static_cast<int>(orient(r, p, q));
  if (p.id == q.id || p.id == r.id || q.id == r.id || rpq == 0) {
    throw Error("degenerate triple for sector counts");
  }
  SectorCounts counts;
  for (const auto& x : points) {
    if (x.id == p.id || x.id == q.id || x.id == r.id) continue;
    const int rpx = static_cast<int>(orient(r, p, x));
    const int rxq = static_cast<int>(orient(r, x, q));
    if (rpx == 0 || rxq == 0) continue;  // collinear with r; excluded by general position
    if (in_ccw_sector(rpq, rpx, rxq)) {
      ++counts.ccw;
    } else {
      ++counts.cw;
    }
  }
  return counts;
}

// -- OrientationTable ---------------------------------------------------------

OrientationTable::OrientationTable(const PointSet& points) { fill(points.points()); }

OrientationTable::OrientationTable(std::span<const GridPoint> points) { fill(points); }

void OrientationTable::set(int i, int j, int k, int s) {
  auto at = [this](int a, int b, int c) -> std::int8_t& {
    return signs_[(static_cast<std::size_t>(a) * n_ + b) * n_ + c];
  };
  const auto v = static_cast<std::int8_t>(s);
  const auto w = static_cast<std::int8_t>(-s);
  at(i, j, k) = v;
  at(j, k, i) = v;
  at(k, i, j) = v;
  at(j, i, k) = w;
  at(i, k, j) = w;
  at(k, j, i) = w;
}

template <class Scalar>
void OrientationTable::fill(std::span<const BasicPoint<Scalar>> points) {
  n_ = static_cast<int>(points.size());
  signs_.assign(static_cast<std::size_t>(n_) * n_ * n_, 0);
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      for (int k = j + 1; k < n_; ++k) {
        set(i, j, k, static_cast<int>(orient(points[i], points[j], points[k])));
      }
    }
  }
}

template <class Scalar>
void OrientationTable::fill_row(std::span<const BasicPoint<Scalar>> points, int i) {
  for (int j = 0; j < n_; ++j) {
    if (j == i) continue;
    for (int k = j + 1; k < n_; ++k) {
      if (k == i) continue;
      set(i, j, k, static_cast<int>(orient(points[i], points[j], points[k])));
    }
  }
}

void OrientationTable::refresh(std::span<const GridPoint> points, int moved) {
  fill_row(points, moved);
}

bool OrientationTable::has_collinear_with(int id) const {
  for (int j = 0; j < n_; ++j) {
    if (j == id) continue;
    for (int k = j + 1; k < n_; ++k) {
      if (k != id && sign(id, j, k) == 0) return true;
    }
  }
  return false;
}

SideCounts OrientationTable::side_counts(int p, int q) const {
  SideCounts counts;
  for (int x = 0; x < n_; ++x) {
    if (x == p || x == q) continue;
    const int s = sign(p, q, x);
    if (s < 0) ++counts.right;
    if (s > 0) ++counts.left;
  }
  return counts;
}

SectorCounts OrientationTable::sector_counts(int p, int r, int q) const {
  const int rpq = sign(r, p, q);
  SectorCounts counts;
  for (int x = 0; x < n_; ++x) {
    if (x == p || x == q || x == r) continue;
    const int rpx = sign(r, p, x);
    const int rxq = sign(r, x, q);
    if (rpx == 0 || rxq == 0) continue;
    if (in_ccw_sector(rpq, rpx, rxq)) {
      ++counts.ccw;
    } else {
      ++counts.cw;
    }
  }
  return counts;
}

}  // namespace lcr
