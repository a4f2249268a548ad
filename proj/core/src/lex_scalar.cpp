#include "xicrystal/lex_scalar.hpp"

#include <algorithm>
#include <sstream>

namespace xicrystal {

LexScalar::LexScalar(Rational base) : coords_{std::move(base)} {}

LexScalar::LexScalar(std::vector<Rational> coords)
    : coords_(std::move(coords)) {}

LexScalar LexScalar::unit(std::size_t index, Rational value) {
  std::vector<Rational> coords(index + 1);
  coords[index] = std::move(value);
  return LexScalar(std::move(coords));
}

Rational LexScalar::coord(std::size_t index) const {
  return index < coords_.size() ? coords_[index] : Rational(0);
}

LexScalar& LexScalar::operator+=(const LexScalar& other) {
  if (coords_.size() < other.coords_.size()) {
    coords_.resize(other.coords_.size());
  }
  for (std::size_t i = 0; i < other.coords_.size(); ++i) {
    coords_[i] += other.coords_[i];
  }
  return *this;
}

LexScalar& LexScalar::operator-=(const LexScalar& other) {
  if (coords_.size() < other.coords_.size()) {
    coords_.resize(other.coords_.size());
  }
  for (std::size_t i = 0; i < other.coords_.size(); ++i) {
    coords_[i] -= other.coords_[i];
  }
  return *this;
}

LexScalar LexScalar::operator-() const {
  LexScalar result = *this;
  for (auto& c : result.coords_) {
    c = -c;
  }
  return result;
}

LexScalar operator*(long factor, const LexScalar& value) {
  LexScalar result = value;
  for (auto& c : result.coords_) {
    c *= factor;
  }
  return result;
}

int LexScalar::sign() const {
  for (const auto& c : coords_) {
    if (c > 0) return 1;
    if (c < 0) return -1;
  }
  return 0;
}

std::strong_ordering LexScalar::operator<=>(const LexScalar& other) const {
  std::size_t dim = std::max(coords_.size(), other.coords_.size());
  for (std::size_t i = 0; i < dim; ++i) {
    Rational lhs = coord(i);
    Rational rhs = other.coord(i);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string LexScalar::str() const {
  std::ostringstream out;
  bool wrote = false;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0 && coords_[i] == 0) continue;
    if (wrote) out << " + ";
    out << format_rational(coords_[i]);
    if (i > 0) out << "*eps" << i;
    wrote = true;
  }
  if (!wrote) out << "0";
  return out.str();
}

}  // namespace xicrystal
