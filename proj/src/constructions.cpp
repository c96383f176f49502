#include "lcr/constructions.hpp"

#include <algorithm>
#include <array>

#include "lcr/crossing.hpp"
#include "lcr/error.hpp"
#include "lcr/formula.hpp"

namespace lcr {

std::string to_string(Part part) {
  switch (part) {
    case Part::Arc0: return "ARC0";
    case Part::Arc1: return "ARC1";
    case Part::Arc2: return "ARC2";
    case Part::A: return "A";
    case Part::B1: return "B1";
    case Part::B2: return "B2";
    case Part::C1: return "C1";
    case Part::C2: return "C2";
    case Part::X1: return "X1";
    case Part::X2: return "X2";
  }
  return "?";
}

ThreeArcSpec ThreeArcSpec::for_size(int n, int eps_exponent) {
  if (n < 3) throw Error("three-arc construction needs n >= 3, got " + std::to_string(n));
  if (eps_exponent < 0) throw Error("epsilon exponent must be nonnegative");
  return ThreeArcSpec{n, n / 3, (n + 1) / 3, (n + 2) / 3, eps_exponent};
}

FivePartSpec FivePartSpec::for_k(int k, int eps_exponent) {
  if (k < 4) throw Error("five-part construction needs k >= 4, got " + std::to_string(k));
  if (eps_exponent < 0) throw Error("epsilon exponent must be nonnegative");
  return FivePartSpec{k, k + 2, k + 2 - k / 2, k / 2, eps_exponent};
}

std::vector<int> PartitionedPointSet::ids_of(Part part) const {
  std::vector<int> ids;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == part) ids.push_back(static_cast<int>(i));
  }
  return ids;
}

namespace {

struct Vec {
  Rational x;
  Rational y;
};

Vec vec(long x, long y) { return {Rational(x), Rational(y)}; }

// m points on the parabola from `from` to `to` whose apex is the chord midpoint
// pushed by eps * bulge. Parameters are the midpoints (2j+1)/(2m) of m equal steps.
std::vector<Vec> parabolic_arc(const Vec& from, const Vec& to, const Vec& bulge,
                               const Rational& eps, int m) {
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const Rational s = make_rational(2 * j + 1, 2 * m);
    const Rational lift = 4 * s * (1 - s) * eps;
    out.push_back({from.x + s * (to.x - from.x) + lift * bulge.x,
                   from.y + s * (to.y - from.y) + lift * bulge.y});
  }
  return out;
}

void append(PartitionedPointSet& set, const std::vector<Vec>& pts, Part part) {
  for (const auto& p : pts) {
    set.points.add(p.x, p.y);
    set.labels.push_back(part);
  }
}

std::vector<Vec> mirrored(std::vector<Vec> pts) {
  for (auto& p : pts) p.x = -p.x;
  return pts;
}

// Rational rotation by 2*atan(26/15), about 120.03 degrees: cos = -451/901, sin = 780/901.
Vec rotate(const Vec& p, int times) {
  static const Rational c = make_rational(-451, 901);
  static const Rational s = make_rational(780, 901);
  Vec out = p;
  for (int t = 0; t < times; ++t) out = {c * out.x - s * out.y, s * out.x + c * out.y};
  return out;
}

}  // namespace

PartitionedPointSet generate_three_arcs(const ThreeArcSpec& spec) {
  PartitionedPointSet set;
  set.kind = ConstructionKind::ThreeArcs;
  set.parameter = spec.n;
  set.eps_exponent = spec.eps_exponent;
  const Rational eps = inverse_power_of_two(spec.eps_exponent);
  const std::array sizes{spec.n0, spec.n1, spec.n2};
  const std::array parts{Part::Arc0, Part::Arc1, Part::Arc2};
  for (int i = 0; i < 3; ++i) {
    // Base arc through (1,0), (3,0) with apex (2, eps); cluster i is its i-th rotation.
    auto arc = parabolic_arc(vec(1, 0), vec(3, 0), vec(0, 1), eps, sizes[static_cast<std::size_t>(i)]);
    for (auto& p : arc) p = rotate(p, i);
    append(set, arc, parts[static_cast<std::size_t>(i)]);
  }
  return set;
}

PartitionedPointSet generate_five_part(const FivePartSpec& spec) {
  PartitionedPointSet set;
  set.kind = ConstructionKind::FivePart;
  set.parameter = spec.k;
  set.eps_exponent = spec.eps_exponent;
  const Rational eps = inverse_power_of_two(spec.eps_exponent);

  const auto a = parabolic_arc(vec(0, 20), vec(0, 24), vec(1, 0), eps, spec.a);
  const auto b1 = parabolic_arc(vec(-24, -12), vec(-20, -10), vec(-1, 2), eps, spec.b);
  // Bulge perpendicular to the chord, toward A, B1 and x1.
  const auto c1 = parabolic_arc(vec(-5, -1), vec(-4, 0), vec(-1, 1), eps, spec.c);

  append(set, a, Part::A);
  append(set, b1, Part::B1);
  append(set, mirrored(b1), Part::B2);
  append(set, c1, Part::C1);
  append(set, mirrored(c1), Part::C2);
  append(set, {vec(-11, 1)}, Part::X1);
  append(set, {vec(11, 1)}, Part::X2);
  return set;
}

PartitionedPointSet generate(ConstructionKind kind, int parameter, int eps_exponent) {
  if (kind == ConstructionKind::ThreeArcs) {
    return generate_three_arcs(ThreeArcSpec::for_size(parameter, eps_exponent));
  }
  return generate_five_part(FivePartSpec::for_k(parameter, eps_exponent));
}

namespace {

using PartGroups = std::map<Part, std::vector<int>>;

PartGroups group_parts(const PartitionedPointSet& set) {
  if (set.labels.size() != static_cast<std::size_t>(set.points.size())) {
    throw Error("part labels do not match the point count");
  }
  PartGroups groups;
  for (std::size_t i = 0; i < set.labels.size(); ++i) {
    groups[set.labels[i]].push_back(static_cast<int>(i));
  }
  return groups;
}

bool is_arc_part(Part p) { return p == Part::Arc0 || p == Part::Arc1 || p == Part::Arc2; }

// +1 / -1 when every point of `ids` lies strictly on that side of line ij, 0 otherwise.
int common_side(const OrientationTable& t, int i, int j, const std::vector<int>& ids) {
  int side = 0;
  for (int x : ids) {
    const int s = t.sign(i, j, x);
    if (s == 0) return 0;
    if (side == 0) side = s;
    if (s != side) return 0;
  }
  return side;
}

}  // namespace

bool verify_secant_separation(const PartitionedPointSet& set) {
  const auto groups = group_parts(set);
  if (groups.size() != 3 || !std::all_of(groups.begin(), groups.end(),
                                         [](const auto& g) { return is_arc_part(g.first); })) {
    throw Error("secant separation needs a three-arc partition");
  }
  const OrientationTable table(set.points);
  for (const auto& [part, ids] : groups) {
    std::vector<const std::vector<int>*> others;
    for (const auto& [other, other_ids] : groups) {
      if (other != part) others.push_back(&other_ids);
    }
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        const int s0 = common_side(table, ids[a], ids[b], *others[0]);
        const int s1 = common_side(table, ids[a], ids[b], *others[1]);
        if (s0 == 0 || s1 == 0 || s0 == s1) return false;
      }
    }
  }
  return true;
}

bool verify_cluster_separation(const PartitionedPointSet& set) {
  const auto groups = group_parts(set);
  static constexpr std::array kFive{Part::A,  Part::B1, Part::B2, Part::C1,
                                    Part::C2, Part::X1, Part::X2};
  if (groups.size() != kFive.size() ||
      !std::all_of(kFive.begin(), kFive.end(), [&](Part p) { return groups.count(p) == 1; })) {
    throw Error("cluster separation needs a five-part partition");
  }
  const OrientationTable table(set.points);
  for (const auto& [part, ids] : groups) {
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        for (const auto& [other, other_ids] : groups) {
          if (other == part) continue;
          if (common_side(table, ids[a], ids[b], other_ids) == 0) return false;
        }
      }
    }
  }
  return true;
}

int construction_target(ConstructionKind kind, int parameter) {
  if (kind == ConstructionKind::ThreeArcs) return static_cast<int>(three_arc_target(parameter));
  return static_cast<int>(five_part_target(parameter));
}

int calibrate_epsilon(ConstructionKind kind, int parameter, int max_exponent) {
  if (max_exponent < 1) throw Error("calibration needs max_exponent >= 1");
  const int target = construction_target(kind, parameter);
  std::string diagnostic;
  for (int t = 1; t <= max_exponent; ++t) {
    const auto set = generate(kind, parameter, t);
    if (auto bad = general_position_violation(set.points)) {
      diagnostic = "t=" + std::to_string(t) + ": " + *bad;
      continue;
    }
    const bool separated = kind == ConstructionKind::ThreeArcs ? verify_secant_separation(set)
                                                               : verify_cluster_separation(set);
    if (!separated) {
      diagnostic = "t=" + std::to_string(t) + ": separation check failed";
      continue;
    }
    const int lcr = local_crossing_number(set.points);
    if (lcr != target) {
      diagnostic = "t=" + std::to_string(t) + ": local crossing number " + std::to_string(lcr) +
                   " != target " + std::to_string(target);
      continue;
    }
    return t;
  }
  throw Error("epsilon calibration failed up to exponent " + std::to_string(max_exponent) +
              " (last: " + diagnostic + ")");
}

PartitionedPointSet construct_three_arcs(int n) {
  ThreeArcSpec::for_size(n, 1);  // validates n
  const int t = calibrate_epsilon(ConstructionKind::ThreeArcs, n, kDefaultMaxExponent);
  return generate_three_arcs(ThreeArcSpec::for_size(n, t));
}

PartitionedPointSet construct_five_part(int k) {
  FivePartSpec::for_k(k, 1);
  const int t = calibrate_epsilon(ConstructionKind::FivePart, k, kDefaultMaxExponent);
  return generate_five_part(FivePartSpec::for_k(k, t));
}

PartPair make_part_pair(Part x, Part y) { return x <= y ? PartPair{x, y} : PartPair{y, x}; }

std::map<PartPair, int> case_maxima_report(const PartitionedPointSet& set) {
  group_parts(set);
  const auto profile = crossing_profile(set.points);
  std::map<PartPair, int> report;
  for (const Edge& e : profile.edges()) {
    const auto key = make_part_pair(set.labels[static_cast<std::size_t>(e.u)],
                                    set.labels[static_cast<std::size_t>(e.v)]);
    auto [it, inserted] = report.try_emplace(key, profile.count(e));
    if (!inserted) it->second = std::max(it->second, profile.count(e));
  }
  return report;
}

}  // namespace lcr
