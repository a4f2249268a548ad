#include "xicrystal/slope.hpp"

#include <json.hpp>

#include <stdexcept>

namespace xicrystal {

std::string to_string(SlopeMode mode) {
  switch (mode) {
    case SlopeMode::generic:
      return "generic";
    case SlopeMode::row:
      return "row";
    case SlopeMode::row_prime:
      return "row_prime";
    case SlopeMode::plain:
      return "plain";
  }
  throw std::logic_error("unknown slope mode");
}

SlopeMode slope_mode_from_string(const std::string& name) {
  if (name == "generic") return SlopeMode::generic;
  if (name == "row") return SlopeMode::row;
  if (name == "row_prime") return SlopeMode::row_prime;
  if (name == "plain") return SlopeMode::plain;
  throw std::invalid_argument("unknown slope mode: " + name);
}

SlopeDatum::SlopeDatum(SlopeMode mode, SlopeBase base)
    : mode_(mode), base_(std::move(base)) {
  if (base_.xi.empty()) {
    throw std::invalid_argument("slope datum needs at least one component");
  }
  if (base_.omega <= 0 || base_.omega_bar <= 0) {
    throw std::invalid_argument("slope entries must be positive");
  }
  for (const auto& entry : base_.xi) {
    if (entry <= 0) {
      throw std::invalid_argument("slope entries must be positive");
    }
  }

  const std::size_t components = base_.xi.size();
  // All entries share one dimension: coordinate 0 is the base part, the
  // rest are the mode's infinitesimal perturbations.
  const std::size_t dim = mode_ == SlopeMode::plain ? 1 : components + 2;
  auto entry_at = [dim](const Rational& value, std::size_t index,
                        int perturbation) {
    std::vector<Rational> coords(dim);
    coords[0] = value;
    if (perturbation != 0) coords[index] = perturbation;
    return LexScalar(std::move(coords));
  };

  switch (mode_) {
    case SlopeMode::plain:
      omega_ = entry_at(base_.omega, 0, 0);
      omega_bar_ = entry_at(base_.omega_bar, 0, 0);
      for (const auto& entry : base_.xi) {
        xi_.push_back(entry_at(entry, 0, 0));
      }
      break;
    case SlopeMode::generic:
    case SlopeMode::row:
      // Larger row wins height ties, then larger component.
      omega_ = entry_at(base_.omega, 1, 1);
      omega_bar_ = entry_at(base_.omega_bar, 0, 0);
      for (std::size_t k = 1; k <= components; ++k) {
        xi_.push_back(entry_at(base_.xi[k - 1], components + 2 - k, 1));
      }
      break;
    case SlopeMode::row_prime:
      // Smaller row wins height ties, then smaller component.
      omega_ = entry_at(base_.omega, 1, -1);
      omega_bar_ = entry_at(base_.omega_bar, 0, 0);
      for (std::size_t k = 1; k <= components; ++k) {
        xi_.push_back(entry_at(base_.xi[k - 1], k + 1, 1));
      }
      break;
  }
}

SlopeDatum SlopeDatum::generic(SlopeBase base) {
  return SlopeDatum(SlopeMode::generic, std::move(base));
}

SlopeDatum SlopeDatum::row(SlopeBase base) {
  return SlopeDatum(SlopeMode::row, std::move(base));
}

SlopeDatum SlopeDatum::row_prime(SlopeBase base) {
  return SlopeDatum(SlopeMode::row_prime, std::move(base));
}

SlopeDatum SlopeDatum::plain(SlopeBase base) {
  return SlopeDatum(SlopeMode::plain, std::move(base));
}

SlopeDatum SlopeDatum::make(SlopeMode mode, SlopeBase base) {
  return SlopeDatum(mode, std::move(base));
}

const LexScalar& SlopeDatum::xi(int component) const {
  if (component < 1 || component > level()) {
    throw std::invalid_argument("component index out of range");
  }
  return xi_[component - 1];
}

LexScalar SlopeDatum::height(const Box& box) const {
  return xi(box.component) + box.row * omega_ + box.col * omega_bar_;
}

bool SlopeDatum::integral() const {
  if (mode_ != SlopeMode::plain) return false;
  if (!is_integer(base_.omega) || !is_integer(base_.omega_bar)) return false;
  for (const auto& entry : base_.xi) {
    if (!is_integer(entry)) return false;
  }
  return true;
}

bool SlopeDatum::aligned() const {
  Rational bound = base_.omega + base_.omega_bar;
  for (std::size_t a = 0; a < base_.xi.size(); ++a) {
    for (std::size_t b = a + 1; b < base_.xi.size(); ++b) {
      Rational gap = base_.xi[a] - base_.xi[b];
      if (gap < 0) gap = -gap;
      if (!(gap < bound)) return false;
    }
  }
  return true;
}

std::string SlopeDatum::to_json() const {
  nlohmann::json doc;
  doc["mode"] = to_string(mode_);
  doc["omega"] = format_rational(base_.omega);
  doc["omega_bar"] = format_rational(base_.omega_bar);
  auto xi = nlohmann::json::array();
  for (const auto& entry : base_.xi) {
    xi.push_back(format_rational(entry));
  }
  doc["xi"] = xi;
  return doc.dump();
}

SlopeDatum SlopeDatum::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument(std::string("invalid JSON: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("mode") || !doc.contains("omega") ||
      !doc.contains("omega_bar") || !doc.contains("xi")) {
    throw std::invalid_argument(
        "slope JSON needs mode, omega, omega_bar, xi");
  }
  SlopeBase base;
  base.omega = parse_rational(doc.at("omega").get<std::string>());
  base.omega_bar = parse_rational(doc.at("omega_bar").get<std::string>());
  for (const auto& entry : doc.at("xi")) {
    base.xi.push_back(parse_rational(entry.get<std::string>()));
  }
  return make(slope_mode_from_string(doc.at("mode").get<std::string>()),
              std::move(base));
}

BoxOrder compare_boxes(const SlopeDatum& datum, const Box& lhs,
                       const Box& rhs) {
  if (lhs == rhs) return BoxOrder::same_box;
  auto order = datum.height(lhs) <=> datum.height(rhs);
  if (order == std::strong_ordering::less) return BoxOrder::less;
  if (order == std::strong_ordering::greater) return BoxOrder::greater;
  if (datum.perturbed()) {
    throw std::logic_error("equal heights for distinct boxes " +
                           to_string(lhs) + " and " + to_string(rhs) +
                           " under a perturbed slope datum");
  }
  return BoxOrder::tie;
}

}  // namespace xicrystal
