#include "lcr/rational.hpp"

#include <cctype>
#include <cstdio>

#include "lcr/error.hpp"

namespace lcr {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational inverse_power_of_two(int exponent) {
  if (exponent < 0) throw Error("negative exponent");
  mpz_class den = 1;
  den <<= static_cast<mp_bitcnt_t>(exponent);
  return Rational(mpz_class(1), den);
}

namespace {

bool is_integer_token(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_token(num, true)) {
    throw Error("malformed rational '" + std::string(text) + "'");
  }
  std::string num_str(num[0] == '+' ? num.substr(1) : num);
  mpz_class numerator(num_str, 10);
  mpz_class denominator = 1;
  if (slash != std::string_view::npos) {
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_token(den, false)) {
      throw Error("malformed rational '" + std::string(text) + "'");
    }
    denominator = mpz_class(std::string(den), 10);
    if (denominator == 0) {
      throw Error("zero denominator in '" + std::string(text) + "'");
    }
  }
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_decimal(const Rational& value, int significant_digits) {
  // mpf keeps enough precision for display; the result never re-enters a predicate.
  mpf_class f(value, 256);
  char buf[128];
  gmp_snprintf(buf, sizeof buf, "%.*Fg", significant_digits, f.get_mpf_t());
  return buf;
}

}  // namespace lcr
