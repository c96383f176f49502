#include "lcr/formula.hpp"

#include <string>

#include "lcr/error.hpp"

namespace lcr {

namespace {

// Integer ceil(a / b) for b > 0 and any sign of a.
std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace

std::int64_t lcr_ceiling_form(std::int64_t n) {
  if (n < 3) return 0;
  const std::int64_t third = ceil_div(n - 3, 3);
  return ceil_div((n - 3 - third) * third, 2);
}

std::int64_t lower_bound_class(std::int64_t n) {
  if (n < 3) throw Error("lower bound needs n >= 3, got " + std::to_string(n));
  switch (n % 3) {
    case 0: return (n - 3) * (n - 3) / 9;
    case 1: return (n - 1) * (n - 4) / 9;
    default: return (n - 2) * (n - 2) / 9 - (n - 2) / 6;
  }
}

LcrValue lcr_formula(std::int64_t n) {
  if (n < 0) throw Error("n must be nonnegative, got " + std::to_string(n));
  LcrValue out;
  out.n = n;
  out.residue = static_cast<int>(n % 3);
  if (n < 3) return out;
  out.ceiling_form = lcr_ceiling_form(n);
  out.piecewise_form = lower_bound_class(n);
  out.exceptional = n == 8 || n == 14;
  if (!out.exceptional && out.ceiling_form != out.piecewise_form) {
    throw Error("closed forms disagree at n = " + std::to_string(n));
  }
  if (n == 8) {
    out.value = 4;
  } else if (n == 14) {
    out.value = 15;
  } else {
    out.value = out.ceiling_form;
  }
  return out;
}

std::int64_t five_part_target(std::int64_t k) { return k * k + 4 * k + 3 - k / 2; }

std::int64_t three_arc_target(std::int64_t n) {
  return ((n + 2) / 3 - 1) * ((n + 1) / 3 - 1);
}

}  // namespace lcr
