#pragma once

#include "xicrystal/rational.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace xicrystal {

/// An exact scalar with ordered infinitesimal parts. coord(0) is the standard
/// (base) part; coord(d) is infinitesimally smaller in magnitude than any
/// nonzero coord(d-1). Comparison is lexicographic, arithmetic is
/// coordinatewise, and coordinates past dimension() count as zero, so scalars
/// of different dimensions mix freely.
class LexScalar {
 public:
  LexScalar() = default;
  explicit LexScalar(Rational base);
  explicit LexScalar(std::vector<Rational> coords);

  /// The scalar with value `value` in coordinate `index` and zero elsewhere.
  static LexScalar unit(std::size_t index, Rational value);

  std::size_t dimension() const { return coords_.size(); }
  Rational coord(std::size_t index) const;
  Rational base() const { return coord(0); }

  LexScalar& operator+=(const LexScalar& other);
  LexScalar& operator-=(const LexScalar& other);
  friend LexScalar operator+(LexScalar lhs, const LexScalar& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend LexScalar operator-(LexScalar lhs, const LexScalar& rhs) {
    lhs -= rhs;
    return lhs;
  }
  LexScalar operator-() const;
  friend LexScalar operator*(long factor, const LexScalar& value);

  /// Sign of the first nonzero coordinate: -1, 0 or +1.
  int sign() const;
  bool positive() const { return sign() > 0; }

  std::strong_ordering operator<=>(const LexScalar& other) const;
  bool operator==(const LexScalar& other) const {
    return (*this <=> other) == std::strong_ordering::equal;
  }

  /// Diagnostic rendering, e.g. "3 + 1*eps1 - 2*eps3".
  std::string str() const;

 private:
  std::vector<Rational> coords_;
};

}  // namespace xicrystal
