#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lcr/geometry.hpp"

namespace lcr {

/// Branch (a): a line through two hull vertices with nearly balanced sides.
struct HullEdgeWitness {
  int p = 0;
  int q = 0;
  SideCounts counts;
};

/// Branch (b): a path p-r-q with hull endpoints whose two open sectors at r are nearly balanced.
struct HullPathWitness {
  int p = 0;
  int r = 0;
  int q = 0;
  SectorCounts counts;
};

struct SeparationWitness {
  std::variant<HullEdgeWitness, HullPathWitness> kind;
  int difference = 0;  ///< |right - left| or |ccw - cw|
  Rational threshold;  ///< (n-2)/3 for an edge, (n-3)/3 for a path

  bool is_edge() const { return std::holds_alternative<HullEdgeWitness>(kind); }
  /// Product of the two separated counts.
  std::int64_t forced_crossings() const;
  /// forced for an edge; ceil(forced / 2) for a path, carried by the better of pr and rq.
  std::int64_t edge_bound() const;
  std::string describe() const;
};

struct LowerBoundCertificate {
  SeparationWitness witness;
  std::int64_t forced_crossings = 0;
  std::int64_t edge_bound = 0;
  int local_crossing_number = 0;  ///< of the drawing the certificate was checked against
};

/// Every witness satisfying (a) or (b), in search order: hull pairs first
/// (hull order, i < j), then ordered hull pairs (p, q) with r ascending.
std::vector<SeparationWitness> all_separation_witnesses(const PointSet& points);

/// First witness in search order. Throws if none exists. The only inputs
/// without a witness are 4 points with a triangular hull: every hull line
/// splits the rest 2/0 and every hull path splits it 1/0.
SeparationWitness find_separation_witness(const PointSet& points);

/// The witness with the largest edge bound (earliest in search order on ties),
/// checked against the drawing's local crossing number.
LowerBoundCertificate lemma_lower_bound(const PointSet& points);

/// Minimum of |S(prq)| - |S(qrp)| in absolute value over hull vertices p != q and r in P \ {p, q}.
int tightness_diagnostic(const PointSet& points);

/// Some edge achieving the local crossing number has an endpoint on the hull.
bool hull_endpoint_property(const PointSet& points);

/// Tallies from the randomized lemma suite. Every failure counter should stay zero.
struct LemmaFuzzSummary {
  int instances = 0;
  std::uint64_t seed = 0;
  int n_min = 0;
  int n_max = 0;
  int witness_failures = 0;      ///< find_separation_witness threw
  /// The part of witness_failures coming from 4 points with a triangular hull,
  /// where no witness can exist.
  int triangular_four_point_failures = 0;
  int unsound_certificates = 0;  ///< edge bound above the local crossing number
  int below_class_bound = 0;     ///< local crossing number below lower_bound_class(n)
  int handshake_failures = 0;    ///< sum of counts != 2 * convex quadrilaterals
  int averaging_failures = 0;    ///< lcr < ceil(2 * total / C(n,2))

  bool ok() const {
    return witness_failures == 0 && unsound_certificates == 0 && below_class_bound == 0 &&
           handshake_failures == 0 && averaging_failures == 0;
  }
};

/// Runs the separation lemma, the certificate soundness check, the class lower
/// bound and the handshake/averaging identities on `instances` random
/// general-position sets with n uniform in [n_min, n_max].
LemmaFuzzSummary run_lemma_fuzz(int instances, std::uint64_t seed, int n_min, int n_max);

nlohmann::json to_json(const LemmaFuzzSummary& summary);
nlohmann::json to_json(const SeparationWitness& witness);
nlohmann::json to_json(const LowerBoundCertificate& certificate);

}  // namespace lcr
