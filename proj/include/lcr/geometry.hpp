#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lcr/rational.hpp"

namespace lcr {

/// A labeled point. The label is the point's index in its PointSet.
template <class Scalar>
struct BasicPoint {
  int id = 0;
  Scalar x{};
  Scalar y{};

  friend bool operator==(const BasicPoint&, const BasicPoint&) = default;
};

using Point = BasicPoint<Rational>;
/// Integer lattice point used by the local search; orientation is exact via 128-bit products.
using GridPoint = BasicPoint<std::int64_t>;

enum class Orientation : int { Clockwise = -1, Collinear = 0, Counterclockwise = 1 };

namespace detail {

inline int sign_of(const Rational& v) { return sgn(v); }

inline int sign_of(__int128 v) { return (v > 0) - (v < 0); }

template <class Scalar>
struct wide {
  using type = Scalar;
};
template <>
struct wide<std::int64_t> {
  using type = __int128;
};

}  // namespace detail

/// Sign of the determinant of (q - p, r - p).
template <class Scalar>
Orientation orient(const BasicPoint<Scalar>& p, const BasicPoint<Scalar>& q,
                   const BasicPoint<Scalar>& r) {
  using W = typename detail::wide<Scalar>::type;
  const W det = W(q.x - p.x) * W(r.y - p.y) - W(q.y - p.y) * W(r.x - p.x);
  return static_cast<Orientation>(detail::sign_of(det));
}

/// Ordered sequence of points with ids 0..n-1.
class PointSet {
 public:
  PointSet() = default;

  /// Appends a point and returns its id.
  int add(Rational x, Rational y);

  int size() const { return static_cast<int>(points_.size()); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](int id) const { return points_[static_cast<std::size_t>(id)]; }
  std::span<const Point> points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> points_;
};

PointSet make_point_set(std::span<const std::pair<long, long>> coords);
PointSet to_point_set(std::span<const GridPoint> grid);

/// Describes the first general-position violation found (duplicate pair or
/// collinear triple, with ids), or nullopt.
std::optional<std::string> general_position_violation(const PointSet& points);
bool is_general_position(const PointSet& points);

/// Throws Error unless every id is in range.
void check_ids(const PointSet& points, std::initializer_list<int> ids);

/// Proper crossing of the open segments ab and cd. Throws when the two
/// segments share an endpoint label or when a collinear triple shows up.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);

/// Hull vertex ids in counterclockwise order, starting from the
/// lexicographically smallest point.
std::vector<int> convex_hull(const PointSet& points);

struct SideCounts {
  int right = 0;  ///< strictly right of the oriented line pq
  int left = 0;   ///< strictly left

  friend bool operator==(const SideCounts&, const SideCounts&) = default;
};

struct SectorCounts {
  int ccw = 0;  ///< |S(prq)|: swept counterclockwise from ray rp to ray rq
  int cw = 0;   ///< |S(qrp)|

  friend bool operator==(const SectorCounts&, const SectorCounts&) = default;
};

SideCounts side_counts(const PointSet& points, const Point& p, const Point& q);
SectorCounts sector_counts(const PointSet& points, const Point& p, const Point& r, const Point& q);

/// Sector membership: x lies strictly inside the sector swept counterclockwise
/// from ray rp to ray rq. Takes the three orientation signs
/// orient(r,p,q), orient(r,p,x), orient(r,x,q); reflex sectors are handled.
inline bool in_ccw_sector(int rpq, int rpx, int rxq) {
  if (rpq > 0) return rpx > 0 && rxq > 0;
  return rpx > 0 || rxq > 0;
}

/// Dense table of orientation signs for every ordered triple of a point set.
class OrientationTable {
 public:
  OrientationTable() = default;
  explicit OrientationTable(const PointSet& points);
  explicit OrientationTable(std::span<const GridPoint> points);

  int size() const { return n_; }

  int sign(int i, int j, int k) const {
    return signs_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
  }

  /// Open segments ij and kl cross. Labels must be pairwise distinct.
  bool crosses(int i, int j, int k, int l) const {
    return sign(i, j, k) != sign(i, j, l) && sign(k, l, i) != sign(k, l, j);
  }

  /// Recomputes every triple containing `moved`.
  void refresh(std::span<const GridPoint> points, int moved);

  /// True iff some triple containing `id` has sign zero.
  bool has_collinear_with(int id) const;

  SideCounts side_counts(int p, int q) const;
  SectorCounts sector_counts(int p, int r, int q) const;

 private:
  template <class Scalar>
  void fill(std::span<const BasicPoint<Scalar>> points);
  template <class Scalar>
  void fill_row(std::span<const BasicPoint<Scalar>> points, int i);
  void set(int i, int j, int k, int s);

  int n_ = 0;
  std::vector<std::int8_t> signs_;
};

}  // namespace lcr
