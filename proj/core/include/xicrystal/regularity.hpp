#pragma once

#include "xicrystal/partition.hpp"
#include "xicrystal/slope.hpp"

#include <utility>
#include <vector>

namespace xicrystal {

/// A triple (box, source, target) with box ∈ λ(source) satisfying the mod-n
/// hook condition
///   p(source) - p(target) + arm_{λ(source)}(box) + leg_{λ(target)}(box) + 1
///     ≡ 0 (mod n).
struct HookTriple {
  Box box;
  int source = 1;
  int target = 1;

  friend auto operator<=>(const HookTriple&, const HookTriple&) = default;
};

std::string to_string(const HookTriple& triple);

/// The two torus weights contributed by a hook triple. Their sum is always
/// ξ_Ω + ξ_Ω̄.
struct TangentWeightPair {
  HookTriple triple;
  LexScalar minus_weight;  // -ξ_t + ξ_s - ξ_Ω·leg + ξ_Ω̄·(arm + 1)
  LexScalar plus_weight;   //  ξ_t - ξ_s + ξ_Ω·(leg + 1) - ξ_Ω̄·arm
};

/// All hook triples of the multi-partition, in (source, target, box) order.
/// Their count is half the tangent dimension at the fixed point.
std::vector<HookTriple> hook_triples(const MultiPartition& mp);

std::vector<TangentWeightPair> tangent_character(const SlopeDatum& datum,
                                                 const MultiPartition& mp);

/// The number of strictly negative tangent weights. Throws std::domain_error
/// when some weight is exactly zero (the datum is not general there).
int attracting_dimension(const SlopeDatum& datum, const MultiPartition& mp);

/// Hook triples whose slope quantity Q = ξ_t - ξ_s + ξ_Ω·leg - ξ_Ω̄·arm lies
/// strictly inside (-ξ_Ω, ξ_Ω̄).
std::vector<HookTriple> illegal_triples(const SlopeDatum& datum,
                                        const MultiPartition& mp);

bool is_regular(const SlopeDatum& datum, const MultiPartition& mp);

struct GradedBoxCounts {
  int boxes_at_least = 0;      // boxes of the color with height >= threshold
  int boxes_above = 0;         // same with strict >
  int removable_at_least = 0;  // removable nodes of the color, height >= threshold
  int addable_at_least = 0;    // addable nodes of the color, height >= threshold
};

GradedBoxCounts graded_box_counts(const SlopeDatum& datum,
                                  const MultiPartition& mp, int residue,
                                  const LexScalar& threshold);

/// Verifies, for H = threshold > max_k ξ_k (else std::invalid_argument):
///   dim V_ī^{>=H} + dim V_ī^{>=H+ξ_Ω+ξ_Ω̄}
///     - dim V_{ī+1}^{>=H+ξ_Ω̄} - dim V_{ī-1}^{>=H+ξ_Ω}
///   = R_ī^{>=H} - A_ī^{>=H+ξ_Ω+ξ_Ω̄}.
bool height_count_identity(const SlopeDatum& datum, const MultiPartition& mp,
                           int residue, const LexScalar& threshold);

/// Pairs (removable, addable) of the given color with
/// h(removable) + ξ_Ω + ξ_Ω̄ > h(addable) > h(removable). A nonempty result
/// implies the multi-partition is not regular.
std::vector<std::pair<Box, Box>> gap_pairs(const SlopeDatum& datum,
                                           const MultiPartition& mp,
                                           int residue);

}  // namespace xicrystal
