#include "xicrystal/rational.hpp"

#include <limits>
#include <stdexcept>

namespace xicrystal {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("zero denominator in rational: " + text);
    }
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: " + text);
  }
}

std::string format_rational(const Rational& value) {
  if (is_integer(value)) {
    return numerator(value).str();
  }
  return numerator(value).str() + "/" + denominator(value).str();
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

long to_long(const Rational& value) {
  if (!is_integer(value)) {
    throw std::invalid_argument("not an integer: " + format_rational(value));
  }
  const Integer& num = numerator(value);
  if (num > std::numeric_limits<long>::max() ||
      num < std::numeric_limits<long>::min()) {
    throw std::overflow_error("integer out of range: " + num.str());
  }
  return static_cast<long>(num);
}

}  // namespace xicrystal
