#pragma once

#include <cstdint>

namespace lcr {

/// Closed-form rectilinear local crossing number of K_n.
struct LcrValue {
  std::int64_t n = 0;
  std::int64_t value = 0;
  int residue = 0;            ///< n mod 3
  bool exceptional = false;   ///< n is 8 or 14
  std::int64_t ceiling_form = 0;    ///< single-ceiling expression (0 for n < 3)
  std::int64_t piecewise_form = 0;  ///< congruence-class expression (0 for n < 3)
};

/// ceil(ceil((n-3)/3) * (n-3-ceil((n-3)/3)) / 2) for n >= 3.
std::int64_t lcr_ceiling_form(std::int64_t n);

/// Class-by-class lower bound: (n-3)^2/9, (n-1)(n-4)/9, (n-2)^2/9 - floor((n-2)/6).
/// Throws for n < 3.
std::int64_t lower_bound_class(std::int64_t n);

/// Throws for negative n. Checks internally that both forms agree off the exceptions.
LcrValue lcr_formula(std::int64_t n);

/// k^2 + 4k + 3 - floor(k/2): the local crossing number of the n = 3k+8 five-part set.
std::int64_t five_part_target(std::int64_t k);

/// (n2-1)(n1-1) with n1 = floor((n+1)/3), n2 = floor((n+2)/3): the three-arc set's value.
std::int64_t three_arc_target(std::int64_t n);

}  // namespace lcr
