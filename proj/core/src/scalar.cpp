#include "subflag/scalar.hpp"

#include <cmath>
#include <stdexcept>

#include "subflag/errors.hpp"

namespace subflag {

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw UsageError("malformed rational: '" + std::string(whole) + "'");
  for (char c : digits)
    if (c < '0' || c > '9') throw UsageError("malformed rational: '" + std::string(whole) + "'");
  return boost::multiprecision::cpp_int(std::string(digits));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_integer(text.substr(0, slash), whole);
    const auto den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw UsageError("zero denominator in '" + std::string(whole) + "'");
    value = Rational(num, den);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto int_part = text.substr(0, dot);
    const auto frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty())
      throw UsageError("malformed rational: '" + std::string(whole) + "'");
    boost::multiprecision::cpp_int num = int_part.empty() ? 0 : parse_integer(int_part, whole);
    boost::multiprecision::cpp_int den = 1;
    for (char c : frac_part) {
      if (c < '0' || c > '9') throw UsageError("malformed rational: '" + std::string(whole) + "'");
      num = num * 10 + (c - '0');
      den *= 10;
    }
    value = Rational(num, den);
  } else {
    value = Rational(parse_integer(text, whole));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& x) { return x.str(); }

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw UsageError("non-finite value has no rational representation");
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  // 2^53 * mantissa is an exact integer.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  Rational r(scaled);
  exponent -= 53;
  if (exponent >= 0) {
    r *= Rational(boost::multiprecision::pow(boost::multiprecision::cpp_int(2), exponent));
  } else {
    r /= Rational(boost::multiprecision::pow(boost::multiprecision::cpp_int(2), -exponent));
  }
  return r;
}

}  // namespace subflag
