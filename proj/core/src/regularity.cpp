#include "xicrystal/regularity.hpp"

#include <sstream>
#include <stdexcept>

namespace xicrystal {

std::string to_string(const HookTriple& triple) {
  std::ostringstream out;
  out << "(" << to_string(triple.box) << "," << triple.source << ","
      << triple.target << ")";
  return out.str();
}

namespace {

struct TripleData {
  HookTriple triple;
  int arm = 0;  // relative to the source component
  int leg = 0;  // relative to the target component
};

// Triples (box, source, target) with box in the source component and
// p(source) - p(target) + arm + leg + 1 divisible by n.
std::vector<TripleData> hook_triple_data(const MultiPartition& mp) {
  std::vector<TripleData> result;
  const int n = mp.modulus();
  for (int source = 1; source <= mp.level(); ++source) {
    const Partition& from = mp.component(source);
    for (int target = 1; target <= mp.level(); ++target) {
      const Partition& to = mp.component(target);
      for (int row = 1; row <= from.rows(); ++row) {
        for (int col = 1; col <= from.part(row); ++col) {
          int arm = from.arm(row, col);
          int leg = to.leg(row, col);
          int value = mp.coloring(source) - mp.coloring(target) + arm + leg + 1;
          if (((value % n) + n) % n == 0) {
            result.push_back(
                {HookTriple{Box{source, row, col}, source, target}, arm, leg});
          }
        }
      }
    }
  }
  return result;
}

}  // namespace

std::vector<HookTriple> hook_triples(const MultiPartition& mp) {
  std::vector<HookTriple> result;
  for (const auto& data : hook_triple_data(mp)) {
    result.push_back(data.triple);
  }
  return result;
}

std::vector<TangentWeightPair> tangent_character(const SlopeDatum& datum,
                                                 const MultiPartition& mp) {
  std::vector<TangentWeightPair> result;
  for (const auto& data : hook_triple_data(mp)) {
    const LexScalar& xi_source = datum.xi(data.triple.source);
    const LexScalar& xi_target = datum.xi(data.triple.target);
    LexScalar minus_weight = xi_source - xi_target -
                             data.leg * datum.omega() +
                             (data.arm + 1) * datum.omega_bar();
    LexScalar plus_weight = xi_target - xi_source +
                            (data.leg + 1) * datum.omega() -
                            data.arm * datum.omega_bar();
    result.push_back({data.triple, std::move(minus_weight),
                      std::move(plus_weight)});
  }
  return result;
}

int attracting_dimension(const SlopeDatum& datum, const MultiPartition& mp) {
  int negative = 0;
  for (const auto& pair : tangent_character(datum, mp)) {
    for (const LexScalar* weight : {&pair.minus_weight, &pair.plus_weight}) {
      int sign = weight->sign();
      if (sign == 0) {
        throw std::domain_error("zero tangent weight at triple " +
                                to_string(pair.triple) +
                                ": the slope datum is not general");
      }
      if (sign < 0) {
        ++negative;
      }
    }
  }
  return negative;
}

std::vector<HookTriple> illegal_triples(const SlopeDatum& datum,
                                        const MultiPartition& mp) {
  std::vector<HookTriple> result;
  for (const auto& data : hook_triple_data(mp)) {
    LexScalar quantity = datum.xi(data.triple.target) -
                         datum.xi(data.triple.source) +
                         data.leg * datum.omega() -
                         data.arm * datum.omega_bar();
    if (-datum.omega() < quantity && quantity < datum.omega_bar()) {
      result.push_back(data.triple);
    }
  }
  return result;
}

bool is_regular(const SlopeDatum& datum, const MultiPartition& mp) {
  return illegal_triples(datum, mp).empty();
}

GradedBoxCounts graded_box_counts(const SlopeDatum& datum,
                                  const MultiPartition& mp, int residue,
                                  const LexScalar& threshold) {
  GradedBoxCounts counts;
  for (int k = 1; k <= mp.level(); ++k) {
    const Partition& part = mp.component(k);
    for (int row = 1; row <= part.rows(); ++row) {
      for (int col = 1; col <= part.part(row); ++col) {
        Box box{k, row, col};
        if (mp.color_of(box) != residue) continue;
        LexScalar height = datum.height(box);
        if (height >= threshold) ++counts.boxes_at_least;
        if (height > threshold) ++counts.boxes_above;
      }
    }
  }
  for (const Box& box : mp.removable_nodes(residue)) {
    if (datum.height(box) >= threshold) ++counts.removable_at_least;
  }
  for (const Box& box : mp.addable_nodes(residue)) {
    if (datum.height(box) >= threshold) ++counts.addable_at_least;
  }
  return counts;
}

bool height_count_identity(const SlopeDatum& datum, const MultiPartition& mp,
                           int residue, const LexScalar& threshold) {
  for (int k = 1; k <= datum.level(); ++k) {
    if (!(threshold > datum.xi(k))) {
      throw std::invalid_argument(
          "height threshold must exceed every component entry");
    }
  }
  const int n = mp.modulus();
  LexScalar span = datum.omega() + datum.omega_bar();
  auto self = graded_box_counts(datum, mp, residue, threshold);
  auto self_shifted = graded_box_counts(datum, mp, residue, threshold + span);
  // A box of color c+1 sits one step (of height gap ξ_Ω̄) to the right of a
  // c-box, a box of color c-1 one step (gap ξ_Ω) below it, which fixes the
  // thresholds of the two mixed-color terms.
  auto next = graded_box_counts(datum, mp, (residue + 1) % n,
                                threshold + datum.omega_bar());
  auto prev = graded_box_counts(datum, mp, ((residue - 1) % n + n) % n,
                                threshold + datum.omega());
  int lhs = self.boxes_at_least + self_shifted.boxes_at_least -
            next.boxes_at_least - prev.boxes_at_least;
  int rhs = self.removable_at_least - self_shifted.addable_at_least;
  return lhs == rhs;
}

std::vector<std::pair<Box, Box>> gap_pairs(const SlopeDatum& datum,
                                           const MultiPartition& mp,
                                           int residue) {
  std::vector<std::pair<Box, Box>> result;
  LexScalar span = datum.omega() + datum.omega_bar();
  for (const Box& removable : mp.removable_nodes(residue)) {
    LexScalar low = datum.height(removable);
    LexScalar high = low + span;
    for (const Box& addable : mp.addable_nodes(residue)) {
      LexScalar height = datum.height(addable);
      if (high > height && height > low) {
        result.emplace_back(removable, addable);
      }
    }
  }
  return result;
}

}  // namespace xicrystal
