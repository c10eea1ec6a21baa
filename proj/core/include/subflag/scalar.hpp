#pragma once

// Scalar types shared by the exact (rational) and floating code paths.

#include <cmath>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "subflag/dual.hpp"

namespace subflag {

/// Arbitrary-precision rational. Expression templates are off so `auto`
/// always holds a value.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

template <typename S>
inline constexpr bool is_exact_v = std::is_same_v<S, Rational>;

inline double magnitude(double x) { return std::fabs(x); }
template <typename T>
double magnitude(const Dual<T>& x) {
  return std::fabs(primal(x));
}
inline double magnitude(const Rational& x) { return std::fabs(x.convert_to<double>()); }

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline bool is_zero(const Rational& x) { return x == 0; }

/// Parses "3", "-2/7" or a finite decimal such as "0.25" exactly.
Rational parse_rational(std::string_view text);

/// "p/q" or "p" for integers.
std::string to_string(const Rational& x);

/// Exact rational value of a finite double (every binary64 is a dyadic rational).
Rational rational_from_double(double x);

}  // namespace subflag
