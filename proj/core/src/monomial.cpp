#include "xicrystal/monomial.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace xicrystal {

Monomial Monomial::variable(int residue, long level, long exponent) {
  Monomial result;
  if (exponent != 0) {
    result.exponents_[{residue, level}] = exponent;
  }
  return result;
}

long Monomial::exponent(int residue, long level) const {
  auto it = exponents_.find({residue, level});
  return it == exponents_.end() ? 0 : it->second;
}

bool Monomial::dominant() const {
  for (const auto& [key, exp] : exponents_) {
    if (exp < 0) return false;
  }
  return true;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  for (const auto& [key, exp] : other.exponents_) {
    long combined = (exponents_[key] += exp);
    if (combined == 0) {
      exponents_.erase(key);
    }
  }
  return *this;
}

Monomial Monomial::inverse() const {
  Monomial result;
  for (const auto& [key, exp] : exponents_) {
    result.exponents_[key] = -exp;
  }
  return result;
}

std::string Monomial::str() const {
  if (identity()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, exp] : exponents_) {
    if (!first) out << " ";
    out << "Y(" << key.first << "," << key.second << ")";
    if (exp != 1) out << "^" << exp;
    first = false;
  }
  return out.str();
}

std::string Monomial::to_json(int modulus) const {
  nlohmann::json doc;
  doc["n"] = modulus;
  auto factors = nlohmann::json::array();
  for (const auto& [key, exp] : exponents_) {
    nlohmann::json factor;
    factor["residue"] = key.first;
    factor["level"] = key.second;
    factor["exp"] = exp;
    factors.push_back(factor);
  }
  doc["factors"] = factors;
  return doc.dump();
}

Monomial Monomial::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument(std::string("invalid JSON: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("factors")) {
    throw std::invalid_argument("monomial JSON needs a factors array");
  }
  Monomial result;
  for (const auto& factor : doc.at("factors")) {
    result *= variable(factor.at("residue").get<int>(),
                       factor.at("level").get<long>(),
                       factor.at("exp").get<long>());
  }
  return result;
}

EdgeConstants make_edge_constants(int modulus, std::vector<long> toward_next,
                                  std::vector<long> toward_prev) {
  if (modulus < 2) {
    throw std::invalid_argument("modulus must be >= 2");
  }
  if (static_cast<int>(toward_next.size()) != modulus ||
      static_cast<int>(toward_prev.size()) != modulus) {
    throw std::invalid_argument("edge constants need one entry per residue");
  }
  long span = toward_next[0] + toward_prev[1 % modulus];
  for (int residue = 0; residue < modulus; ++residue) {
    if (toward_next[residue] + toward_prev[(residue + 1) % modulus] != span) {
      throw std::invalid_argument(
          "edge constant sums must be constant over residues");
    }
  }
  return EdgeConstants{modulus, std::move(toward_next), std::move(toward_prev),
                       span};
}

EdgeConstants constants_from_slope(const SlopeDatum& datum, int modulus) {
  if (!datum.integral()) {
    throw std::invalid_argument(
        "edge constants need a plain slope datum with integer entries");
  }
  if (modulus < 2) {
    throw std::invalid_argument("modulus must be >= 2");
  }
  long omega = to_long(datum.base().omega);
  long omega_bar = to_long(datum.base().omega_bar);
  return EdgeConstants{modulus, std::vector<long>(modulus, omega_bar),
                       std::vector<long>(modulus, omega), omega + omega_bar};
}

Monomial a_monomial(const EdgeConstants& constants, int residue, long level) {
  const int n = constants.modulus;
  if (residue < 0 || residue >= n) {
    throw std::invalid_argument("residue out of range");
  }
  Monomial result = Monomial::variable(residue, level);
  result *= Monomial::variable(residue, level + constants.level_span);
  result *= Monomial::variable((residue + 1) % n,
                               level + constants.toward_next[residue], -1);
  result *= Monomial::variable((residue - 1 + n) % n,
                               level + constants.toward_prev[residue], -1);
  return result;
}

MonomialStats monomial_stats(const Monomial& monomial, int modulus,
                             int residue) {
  MonomialStats stats;
  stats.weight.assign(modulus, 0);
  for (const auto& [key, exp] : monomial.factors()) {
    if (key.first < 0 || key.first >= modulus) {
      throw std::invalid_argument("monomial residue out of range");
    }
    stats.weight[key.first] += exp;
  }

  // Support of the chosen residue, ascending by level.
  std::vector<std::pair<long, long>> support;
  for (const auto& [key, exp] : monomial.factors()) {
    if (key.first == residue) {
      support.emplace_back(key.second, exp);
    }
  }

  // phi = max_k sum_{s<=k}; the empty prefix contributes 0.
  long running = 0;
  for (const auto& [level, exp] : support) {
    running += exp;
    stats.phi = std::max(stats.phi, running);
  }
  if (stats.phi > 0) {
    running = 0;
    for (const auto& [level, exp] : support) {
      running += exp;
      if (running == stats.phi) {
        stats.lower_level = level;  // minimal k attaining phi
        break;
      }
    }
  }

  // eps = -min_k sum_{s>k}; the empty suffix contributes 0.
  running = 0;
  long lowest = 0;
  for (auto it = support.rbegin(); it != support.rend(); ++it) {
    running += it->second;
    lowest = std::min(lowest, running);
  }
  stats.eps = -lowest;
  if (stats.eps > 0) {
    running = 0;
    for (auto it = support.rbegin(); it != support.rend(); ++it) {
      running += it->second;
      if (running == lowest) {
        stats.raise_level = it->first;  // maximal k with sum_{s>=k} = -eps
        break;
      }
    }
  }
  return stats;
}

std::optional<Monomial> lower_direct(const EdgeConstants& constants,
                                     const Monomial& monomial, int residue) {
  MonomialStats stats = monomial_stats(monomial, constants.modulus, residue);
  if (stats.phi == 0) return std::nullopt;
  return a_monomial(constants, residue, *stats.lower_level).inverse() *
         monomial;
}

std::optional<Monomial> raise_direct(const EdgeConstants& constants,
                                     const Monomial& monomial, int residue) {
  MonomialStats stats = monomial_stats(monomial, constants.modulus, residue);
  if (stats.eps == 0) return std::nullopt;
  return a_monomial(constants, residue,
                    *stats.raise_level - constants.level_span) *
         monomial;
}

std::vector<std::pair<long, bool>> monomial_brackets(const Monomial& monomial,
                                                     int residue) {
  std::vector<std::pair<long, bool>> brackets;
  // factors() ascends by level; emit one bracket per unit of exponent in
  // descending level order.
  std::vector<std::pair<long, long>> support;
  for (const auto& [key, exp] : monomial.factors()) {
    if (key.first == residue) {
      support.emplace_back(key.second, exp);
    }
  }
  for (auto it = support.rbegin(); it != support.rend(); ++it) {
    auto [level, exp] = *it;
    for (long copy = 0; copy < std::abs(exp); ++copy) {
      brackets.emplace_back(level, exp > 0);
    }
  }
  return brackets;
}

namespace {

// Index of the first uncanceled "(" and the last uncanceled ")" after
// canceling adjacent "()" pairs; -1 when absent.
std::pair<int, int> uncanceled_ends(
    const std::vector<std::pair<long, bool>>& brackets) {
  std::vector<char> canceled(brackets.size(), 0);
  std::vector<std::size_t> open_stack;
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    if (brackets[i].second) {
      open_stack.push_back(i);
    } else if (!open_stack.empty()) {
      canceled[open_stack.back()] = 1;
      canceled[i] = 1;
      open_stack.pop_back();
    }
  }
  int first_open = -1;
  int last_close = -1;
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    if (canceled[i]) continue;
    if (brackets[i].second) {
      if (first_open < 0) first_open = static_cast<int>(i);
    } else {
      last_close = static_cast<int>(i);
    }
  }
  return {first_open, last_close};
}

}  // namespace

std::optional<Monomial> lower_bracket(const EdgeConstants& constants,
                                      const Monomial& monomial, int residue) {
  auto brackets = monomial_brackets(monomial, residue);
  auto [first_open, last_close] = uncanceled_ends(brackets);
  if (first_open < 0) return std::nullopt;
  return a_monomial(constants, residue, brackets[first_open].first).inverse() *
         monomial;
}

std::optional<Monomial> raise_bracket(const EdgeConstants& constants,
                                      const Monomial& monomial, int residue) {
  auto brackets = monomial_brackets(monomial, residue);
  auto [first_open, last_close] = uncanceled_ends(brackets);
  if (last_close < 0) return std::nullopt;
  return a_monomial(constants, residue,
                    brackets[last_close].first - constants.level_span) *
         monomial;
}

namespace {

long base_height(const SlopeDatum& datum, const Box& box) {
  const SlopeBase& base = datum.base();
  Rational height = base.xi[box.component - 1] + box.row * base.omega +
                    box.col * base.omega_bar;
  return to_long(height);
}

}  // namespace

Monomial psi(const SlopeDatum& datum, const MultiPartition& mp) {
  if (!datum.integral()) {
    throw std::invalid_argument("psi needs a plain integral slope datum");
  }
  if (datum.level() != mp.level()) {
    throw std::invalid_argument(
        "slope datum and multi-partition component counts differ");
  }
  long span = to_long(datum.base().omega + datum.base().omega_bar);
  Monomial result;
  for (const Box& box : mp.addable_nodes()) {
    result *= Monomial::variable(mp.color_of(box), base_height(datum, box));
  }
  for (const Box& box : mp.removable_nodes()) {
    result *= Monomial::variable(mp.color_of(box),
                                 base_height(datum, box) + span, -1);
  }
  return result;
}

bool is_aligned_dominant(const Monomial& monomial, long level_span) {
  if (!monomial.dominant()) return false;
  if (monomial.identity()) return 0 < level_span;
  long lowest = monomial.factors().begin()->first.second;
  long highest = lowest;
  for (const auto& [key, exp] : monomial.factors()) {
    lowest = std::min(lowest, key.second);
    highest = std::max(highest, key.second);
  }
  return highest - lowest < level_span;
}

namespace {

// The single box by which `larger` exceeds `smaller`.
Box added_box(const MultiPartition& smaller, const MultiPartition& larger) {
  for (int k = 1; k <= smaller.level(); ++k) {
    const Partition& before = smaller.component(k);
    const Partition& after = larger.component(k);
    if (before == after) continue;
    for (int row = 1; row <= after.rows(); ++row) {
      if (after.part(row) == before.part(row) + 1) {
        return Box{k, row, after.part(row)};
      }
    }
  }
  throw std::logic_error("edge endpoints do not differ by one box");
}

}  // namespace

std::optional<PsiMismatch> verify_psi_commutes(const SlopeDatum& integral_datum,
                                               const EdgeConstants& constants,
                                               const CrystalGraph& graph) {
  if (!integral_datum.integral()) {
    throw std::invalid_argument(
        "psi verification needs a plain integral slope datum");
  }
  if (static_cast<int>(graph.coloring().size()) != integral_datum.level()) {
    throw std::invalid_argument(
        "graph coloring length must match the slope datum");
  }
  long omega = to_long(integral_datum.base().omega);
  long omega_bar = to_long(integral_datum.base().omega_bar);
  const int n = graph.modulus();
  if (constants.modulus != n ||
      constants.toward_next != std::vector<long>(n, omega_bar) ||
      constants.toward_prev != std::vector<long>(n, omega)) {
    throw std::invalid_argument(
        "edge constants do not come from the slope datum");
  }

  SlopeDatum row_datum = SlopeDatum::row(integral_datum.base());

  std::vector<long> highest_weight(n, 0);
  for (int color : graph.coloring()) {
    highest_weight[color] += 1;
  }

  std::vector<Monomial> images;
  images.reserve(graph.vertices().size());
  for (const auto& vertex : graph.vertices()) {
    images.push_back(psi(integral_datum, vertex));
  }

  for (std::size_t v = 0; v < graph.vertices().size(); ++v) {
    const MultiPartition& vertex = graph.vertices()[v];
    const Monomial& image = images[v];
    std::vector<long> content = vertex.content();
    MonomialStats stats = monomial_stats(image, n, 0);
    for (int residue = 0; residue < n; ++residue) {
      long expected = highest_weight[residue] - 2 * content[residue] +
                      content[(residue + 1) % n] +
                      content[(residue - 1 + n) % n];
      if (stats.weight[residue] != expected) {
        return PsiMismatch{vertex.to_json(), residue,
                           "monomial weight does not match the content"};
      }
    }

    bool frontier = vertex.total_boxes() >= graph.max_boxes();
    for (int residue = 0; residue < n; ++residue) {
      if (!frontier) {
        auto lowered = lower(row_datum, vertex, residue);
        auto lowered_image = lower_direct(constants, image, residue);
        if (lowered.has_value() != lowered_image.has_value()) {
          return PsiMismatch{vertex.to_json(), residue,
                             "lowering is defined on only one side"};
        }
        if (lowered &&
            psi(integral_datum, *lowered) != *lowered_image) {
          return PsiMismatch{vertex.to_json(), residue,
                             "psi does not intertwine lowering"};
        }
      }
      auto raised = raise(row_datum, vertex, residue);
      auto raised_image = raise_direct(constants, image, residue);
      if (raised.has_value() != raised_image.has_value()) {
        return PsiMismatch{vertex.to_json(), residue,
                           "raising is defined on only one side"};
      }
      if (raised && psi(integral_datum, *raised) != *raised_image) {
        return PsiMismatch{vertex.to_json(), residue,
                           "psi does not intertwine raising"};
      }
    }
  }

  for (const auto& edge : graph.edges()) {
    const MultiPartition& source = graph.vertices()[edge[0]];
    const MultiPartition& target = graph.vertices()[edge[2]];
    Box box = added_box(source, target);
    if (source.color_of(box) != edge[1]) {
      return PsiMismatch{source.to_json(), edge[1],
                         "edge label does not match the added box color"};
    }
    Monomial expected =
        a_monomial(constants, edge[1], base_height(integral_datum, box))
            .inverse() *
        images[edge[0]];
    if (images[edge[2]] != expected) {
      return PsiMismatch{source.to_json(), edge[1],
                         "one-step relation fails on an edge"};
    }
  }
  return std::nullopt;
}

}  // namespace xicrystal
