#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lcr {

/// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
/// denominator) after every arithmetic operation; values built from raw
/// numerator/denominator pairs go through make_rational().
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// 1 / 2^exponent, exactly.
Rational inverse_power_of_two(int exponent);

/// Parses "n" or "n/d" (base 10, optional leading '-' on the numerator).
/// Throws lcr::Error on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "n" when the denominator is 1, "n/d" otherwise.
std::string to_string(const Rational& value);

/// Decimal rendering with the given number of significant digits. Display only.
std::string to_decimal(const Rational& value, int significant_digits = 9);

}  // namespace lcr
