#include "lcr/separation.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <nlohmann/json.hpp>

#include "lcr/crossing.hpp"
#include "lcr/error.hpp"
#include "lcr/formula.hpp"
#include "lcr/search.hpp"

namespace lcr {

std::int64_t SeparationWitness::forced_crossings() const {
  return std::visit(
      [](const auto& w) -> std::int64_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(w)>, HullEdgeWitness>) {
          return std::int64_t{w.counts.right} * w.counts.left;
        } else {
          return std::int64_t{w.counts.ccw} * w.counts.cw;
        }
      },
      kind);
}

std::int64_t SeparationWitness::edge_bound() const {
  const auto forced = forced_crossings();
  return is_edge() ? forced : (forced + 1) / 2;
}

std::string SeparationWitness::describe() const {
  if (const auto* e = std::get_if<HullEdgeWitness>(&kind)) {
    return "hull edge (" + std::to_string(e->p) + "," + std::to_string(e->q) +
           ") right=" + std::to_string(e->counts.right) + " left=" + std::to_string(e->counts.left);
  }
  const auto& w = std::get<HullPathWitness>(kind);
  return "hull path (" + std::to_string(w.p) + "," + std::to_string(w.r) + "," +
         std::to_string(w.q) + ") ccw=" + std::to_string(w.counts.ccw) +
         " cw=" + std::to_string(w.counts.cw);
}

namespace {

struct Prepared {
  OrientationTable table;
  std::vector<int> hull;
  Rational edge_threshold;
  Rational path_threshold;
};

Prepared prepare(const PointSet& points) {
  if (points.size() < 3) throw Error("separation needs at least 3 points");
  if (auto bad = general_position_violation(points)) throw Error("not in general position: " + *bad);
  const long n = points.size();
  return {OrientationTable(points), convex_hull(points), make_rational(n - 2, 3),
          make_rational(n - 3, 3)};
}

Error no_witness_error(const PointSet& points, const Prepared& prep) {
  if (points.size() == 4 && prep.hull.size() == 3) {
    return Error(
        "no separation witness exists: a triangle with one interior point is a counterexample "
        "to the separation lemma at n = 4");
  }
  return Error("separation lemma violated: no witness found (implementation bug)");
}

// Visits candidate witnesses in search order; stops when the visitor returns false.
template <class Visitor>
void for_each_witness(const Prepared& prep, Visitor&& visit) {
  const auto& hull = prep.hull;
  const int n = prep.table.size();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    for (std::size_t j = i + 1; j < hull.size(); ++j) {
      const auto counts = prep.table.side_counts(hull[i], hull[j]);
      const int diff = std::abs(counts.right - counts.left);
      if (diff <= prep.edge_threshold) {
        if (!visit(SeparationWitness{HullEdgeWitness{hull[i], hull[j], counts}, diff,
                                     prep.edge_threshold})) {
          return;
        }
      }
    }
  }
  for (std::size_t i = 0; i < hull.size(); ++i) {
    for (std::size_t j = 0; j < hull.size(); ++j) {
      if (i == j) continue;
      const int p = hull[i];
      const int q = hull[j];
      for (int r = 0; r < n; ++r) {
        if (r == p || r == q) continue;
        const auto counts = prep.table.sector_counts(p, r, q);
        const int diff = std::abs(counts.ccw - counts.cw);
        if (diff <= prep.path_threshold) {
          if (!visit(SeparationWitness{HullPathWitness{p, r, q, counts}, diff,
                                       prep.path_threshold})) {
            return;
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<SeparationWitness> all_separation_witnesses(const PointSet& points) {
  const auto prep = prepare(points);
  std::vector<SeparationWitness> out;
  for_each_witness(prep, [&](SeparationWitness w) {
    out.push_back(std::move(w));
    return true;
  });
  return out;
}

SeparationWitness find_separation_witness(const PointSet& points) {
  const auto prep = prepare(points);
  std::optional<SeparationWitness> found;
  for_each_witness(prep, [&](SeparationWitness w) {
    found = std::move(w);
    return false;
  });
  if (!found) throw no_witness_error(points, prep);
  return *found;
}

LowerBoundCertificate lemma_lower_bound(const PointSet& points) {
  const auto prep = prepare(points);
  std::optional<SeparationWitness> best;
  for_each_witness(prep, [&](SeparationWitness w) {
    if (!best || w.edge_bound() > best->edge_bound()) best = std::move(w);
    return true;
  });
  if (!best) throw no_witness_error(points, prep);
  LowerBoundCertificate cert{*best, best->forced_crossings(), best->edge_bound(),
                             crossing_profile(prep.table).local_crossing_number()};
  if (cert.edge_bound > cert.local_crossing_number) {
    throw Error("unsound certificate: bound " + std::to_string(cert.edge_bound) +
                " exceeds local crossing number " + std::to_string(cert.local_crossing_number));
  }
  return cert;
}

int tightness_diagnostic(const PointSet& points) {
  if (points.size() < 4) throw Error("tightness diagnostic needs at least 4 points");
  const auto prep = prepare(points);
  int best = points.size();
  for (int p : prep.hull) {
    for (int q : prep.hull) {
      if (p == q) continue;
      for (int r = 0; r < points.size(); ++r) {
        if (r == p || r == q) continue;
        const auto c = prep.table.sector_counts(p, r, q);
        best = std::min(best, std::abs(c.ccw - c.cw));
      }
    }
  }
  return best;
}

bool hull_endpoint_property(const PointSet& points) {
  if (points.size() < 3) throw Error("hull endpoint property needs at least 3 points");
  const auto hull = convex_hull(points);
  std::vector<bool> on_hull(static_cast<std::size_t>(points.size()), false);
  for (int id : hull) on_hull[static_cast<std::size_t>(id)] = true;
  const auto profile = crossing_profile(points);
  const auto maximal = profile.maximal_edges();
  return std::any_of(maximal.begin(), maximal.end(), [&](const Edge& e) {
    return on_hull[static_cast<std::size_t>(e.u)] || on_hull[static_cast<std::size_t>(e.v)];
  });
}

LemmaFuzzSummary run_lemma_fuzz(int instances, std::uint64_t seed, int n_min, int n_max) {
  if (instances < 1) throw Error("fuzz needs at least one instance");
  if (n_min < 3 || n_max < n_min) throw Error("fuzz needs 3 <= n_min <= n_max");
  LemmaFuzzSummary summary;
  summary.instances = instances;
  summary.seed = seed;
  summary.n_min = n_min;
  summary.n_max = n_max;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < instances; ++i) {
    const int n = static_cast<int>(std::uniform_int_distribution<int>(n_min, n_max)(rng));
    const auto grid = random_general_position(n, rng);
    const PointSet points = to_point_set(grid);
    const OrientationTable table(points);
    const auto profile = crossing_profile(table);
    const int lcr = profile.local_crossing_number();

    bool has_witness = true;
    try {
      find_separation_witness(points);
    } catch (const Error&) {
      has_witness = false;
      ++summary.witness_failures;
      if (n == 4 && convex_hull(points).size() == 3) ++summary.triangular_four_point_failures;
    }
    if (has_witness) {
      try {
        lemma_lower_bound(points);
      } catch (const Error&) {
        ++summary.unsound_certificates;
      }
    }
    if (lcr < lower_bound_class(n)) ++summary.below_class_bound;

    std::int64_t sum = 0;
    for (int c : profile.counts()) sum += c;
    const std::int64_t total = count_convex_quadrilaterals(table);
    if (sum != 2 * total) ++summary.handshake_failures;
    const std::int64_t pairs = std::int64_t{n} * (n - 1) / 2;
    if (std::int64_t{lcr} * pairs < 2 * total) ++summary.averaging_failures;
  }
  return summary;
}

nlohmann::json to_json(const LemmaFuzzSummary& s) {
  return {{"instances", s.instances},
          {"seed", s.seed},
          {"n_range", {s.n_min, s.n_max}},
          {"witness_failures", s.witness_failures},
          {"triangular_four_point_failures", s.triangular_four_point_failures},
          {"unsound_certificates", s.unsound_certificates},
          {"below_class_bound", s.below_class_bound},
          {"handshake_failures", s.handshake_failures},
          {"averaging_failures", s.averaging_failures},
          {"ok", s.ok()}};
}

nlohmann::json to_json(const SeparationWitness& witness) {
  nlohmann::json j;
  if (const auto* e = std::get_if<HullEdgeWitness>(&witness.kind)) {
    j = {{"kind", "hull_edge"},
         {"p", e->p},
         {"q", e->q},
         {"right", e->counts.right},
         {"left", e->counts.left}};
  } else {
    const auto& w = std::get<HullPathWitness>(witness.kind);
    j = {{"kind", "hull_path"}, {"p", w.p},           {"r", w.r},
         {"q", w.q},            {"ccw", w.counts.ccw}, {"cw", w.counts.cw}};
  }
  j["difference"] = witness.difference;
  j["threshold"] = to_string(witness.threshold);
  return j;
}

nlohmann::json to_json(const LowerBoundCertificate& certificate) {
  return {{"witness", to_json(certificate.witness)},
          {"forced_crossings", certificate.forced_crossings},
          {"edge_bound", certificate.edge_bound},
          {"lcr", certificate.local_crossing_number}};
}

}  // namespace lcr
