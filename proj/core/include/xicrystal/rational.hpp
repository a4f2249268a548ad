#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace xicrystal {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p" (optionally signed). Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical rendering: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string format_rational(const Rational& value);

bool is_integer(const Rational& value);

/// The value as a long. Requires is_integer(value) and that it fits.
long to_long(const Rational& value);

}  // namespace xicrystal
