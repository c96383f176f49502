#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lcr/geometry.hpp"

namespace lcr {

enum class Part { Arc0, Arc1, Arc2, A, B1, B2, C1, C2, X1, X2 };

std::string to_string(Part part);

enum class ConstructionKind { ThreeArcs, FivePart };

/// Cluster sizes n0 <= n1 <= n2 <= n0 + 1 and the bulge 1/2^eps_exponent.
struct ThreeArcSpec {
  int n = 0;
  int n0 = 0;
  int n1 = 0;
  int n2 = 0;
  int eps_exponent = 1;

  static ThreeArcSpec for_size(int n, int eps_exponent);
};

/// |A| = k+2, |B1| = |B2| = k+2-floor(k/2), |C1| = |C2| = floor(k/2), plus x1 and x2.
struct FivePartSpec {
  int k = 0;
  int a = 0;
  int b = 0;
  int c = 0;
  int eps_exponent = 1;

  static FivePartSpec for_k(int k, int eps_exponent);
  int total() const { return a + 2 * b + 2 * c + 2; }
};

/// A generated point set together with the part each point belongs to.
/// Points within a part are listed in arc-parameter order.
struct PartitionedPointSet {
  PointSet points;
  std::vector<Part> labels;
  ConstructionKind kind = ConstructionKind::ThreeArcs;
  int parameter = 0;  ///< n for three arcs, k for five parts
  int eps_exponent = 0;

  std::vector<int> ids_of(Part part) const;
};

/// Uncalibrated generators: the bulge is 1/2^eps_exponent. Exponent 0 gives a
/// fat unit bulge, which the verifiers are expected to reject.
PartitionedPointSet generate_three_arcs(const ThreeArcSpec& spec);
PartitionedPointSet generate_five_part(const FivePartSpec& spec);
PartitionedPointSet generate(ConstructionKind kind, int parameter, int eps_exponent);

/// Every line through two points of one cluster puts one other cluster
/// strictly on one side and the third strictly on the other.
bool verify_secant_separation(const PartitionedPointSet& set);

/// No line through two points of one part separates any other part.
bool verify_cluster_separation(const PartitionedPointSet& set);

/// The local crossing number the construction is built to achieve.
int construction_target(ConstructionKind kind, int parameter);

/// Smallest t in [1, max_exponent] whose generated set is in general position,
/// passes its separation verifier, and hits construction_target.
/// Throws Error with the last failing diagnostic otherwise.
int calibrate_epsilon(ConstructionKind kind, int parameter, int max_exponent);

inline constexpr int kDefaultMaxExponent = 64;

/// Calibrated constructions. Throw for n < 3 and k < 4 respectively.
PartitionedPointSet construct_three_arcs(int n);
PartitionedPointSet construct_five_part(int k);

using PartPair = std::pair<Part, Part>;

/// For every unordered pair of parts (X, Y) that spans at least one edge, the
/// largest crossing count over edges with one endpoint in X and the other in Y.
std::map<PartPair, int> case_maxima_report(const PartitionedPointSet& set);

PartPair make_part_pair(Part x, Part y);

}  // namespace lcr
