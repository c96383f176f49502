#include "doctest.h"
#include "lcr/error.hpp"
#include "lcr/formula.hpp"
#include "lcr/rational.hpp"

using namespace lcr;

namespace {

// Both closed forms evaluated with exact rationals and explicit ceil/floor.
std::int64_t ceil_q(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r.get_si();
}

std::int64_t floor_q(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r.get_si();
}

std::int64_t ceiling_oracle(long n) {
  const std::int64_t third = ceil_q(make_rational(n - 3, 3));
  return ceil_q(Rational(n - 3 - third) * Rational(third) / 2);
}

std::int64_t piecewise_oracle(long n) {
  const Rational N(n);
  if (n % 3 == 0) return floor_q((N - 3) * (N - 3) / 9);
  if (n % 3 == 1) return floor_q((N - 1) * (N - 4) / 9);
  return floor_q((N - 2) * (N - 2) / 9) - floor_q((N - 2) / 6);
}

}  // namespace

TEST_CASE("lcr_formula spot values") {
  CHECK(lcr_formula(8).value == 4);
  CHECK(lcr_formula(8).exceptional);
  CHECK(lcr_formula(14).value == 15);
  CHECK(lcr_formula(14).exceptional);
  CHECK(lcr_formula(9).value == 4);
  CHECK(lcr_formula(10).value == 6);
  CHECK(lcr_formula(11).value == 8);
  CHECK(lcr_formula(17).value == 23);
  CHECK(lcr_formula(20).value == 33);
  CHECK(lcr_formula(3).value == 0);
  CHECK(lcr_formula(5).value == 1);
  for (int n = 0; n <= 2; ++n) {
    CHECK(lcr_formula(n).value == 0);
    CHECK_FALSE(lcr_formula(n).exceptional);
  }
  CHECK_THROWS_AS(lcr_formula(-1), Error);
}

TEST_CASE("lower_bound_class") {
  CHECK(lower_bound_class(12) == 9);
  CHECK(lower_bound_class(8) == 3);
  CHECK(lower_bound_class(17) == 23);
  CHECK_THROWS_AS(lower_bound_class(2), Error);
}

TEST_CASE("both closed forms agree with rational oracles for n <= 10000") {
  for (long n = 3; n <= 10000; ++n) {
    const auto v = lcr_formula(n);
    REQUIRE(v.ceiling_form == ceiling_oracle(n));
    REQUIRE(v.piecewise_form == piecewise_oracle(n));
    REQUIRE(v.ceiling_form == v.piecewise_form);
    REQUIRE(v.residue == n % 3);
    if (n != 8 && n != 14) REQUIRE(v.value == lower_bound_class(n));
  }
}

TEST_CASE("lcr_formula is nondecreasing") {
  std::int64_t prev = 0;
  for (long n = 0; n <= 10000; ++n) {
    const auto v = lcr_formula(n).value;
    REQUIRE(v >= prev);
    prev = v;
  }
}

TEST_CASE("construction targets") {
  CHECK(three_arc_target(9) == 4);
  CHECK(three_arc_target(10) == 6);
  CHECK(three_arc_target(11) == 9);
  CHECK(three_arc_target(3) == 0);
  for (int k = 4; k <= 40; ++k) CHECK(five_part_target(k) == lcr_formula(3 * k + 8).value);
  CHECK(five_part_target(4) == 33);
  CHECK(five_part_target(5) == 46);
  CHECK(five_part_target(7) == 77);
  for (long n = 3; n <= 300; ++n) {
    if (n % 3 != 2) CHECK(three_arc_target(n) == lcr_formula(n).value);
  }
}
