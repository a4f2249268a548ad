#pragma once

#include "xicrystal/crystal.hpp"
#include "xicrystal/partition.hpp"
#include "xicrystal/slope.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace xicrystal {

/// A Laurent monomial in variables Y_{residue, level} with finite support;
/// stored exponents are nonzero. Multiplication adds exponents.
class Monomial {
 public:
  Monomial() = default;  // the identity monomial

  static Monomial variable(int residue, long level, long exponent = 1);

  long exponent(int residue, long level) const;
  bool identity() const { return exponents_.empty(); }
  bool dominant() const;  // all exponents >= 0

  /// Factors keyed by (residue, level), ascending.
  const std::map<std::pair<int, long>, long>& factors() const {
    return exponents_;
  }

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial lhs, const Monomial& rhs) {
    lhs *= rhs;
    return lhs;
  }
  Monomial inverse() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string str() const;  // e.g. "Y(0,3) Y(1,4)^-2"

  /// {"factors":[{"exp":...,"level":...,"residue":...},...],"n":...}.
  std::string to_json(int modulus) const;
  static Monomial from_json(const std::string& text);

 private:
  std::map<std::pair<int, long>, long> exponents_;
};

/// Per-residue edge constants: toward_next[ī] = c_{ī,ī+1} and
/// toward_prev[ī] = c_{ī,ī-1}, stored by (residue, direction) so the A
/// monomial stays unambiguous for n = 2. The sums
/// toward_next[ī] + toward_prev[ī+1] must equal level_span (K) for all ī.
struct EdgeConstants {
  int modulus = 2;
  std::vector<long> toward_next;
  std::vector<long> toward_prev;
  long level_span = 0;
};

/// Validates the constant-sum condition; throws std::invalid_argument.
EdgeConstants make_edge_constants(int modulus, std::vector<long> toward_next,
                                  std::vector<long> toward_prev);

/// toward_next ≡ ξ_Ω̄, toward_prev ≡ ξ_Ω, level_span = ξ_Ω + ξ_Ω̄, for an
/// integral plain datum (else std::invalid_argument).
EdgeConstants constants_from_slope(const SlopeDatum& datum, int modulus);

/// A_{c;ī,k} = Y_{ī,k} · Y_{ī,k+K} · Y_{ī+1,k+toward_next[ī]}^{-1}
///                               · Y_{ī-1,k+toward_prev[ī]}^{-1}.
Monomial a_monomial(const EdgeConstants& constants, int residue, long level);

struct MonomialStats {
  std::vector<long> weight;         // wt_ī = Σ_k y_{ī,k}, indexed by residue
  long eps = 0;                     // ε for the queried residue
  long phi = 0;                     // φ for the queried residue
  std::optional<long> raise_level;  // k_e, absent when eps == 0
  std::optional<long> lower_level;  // k_f, absent when phi == 0
};

/// ε = -min_k Σ_{s>k} y_{ī,s}, φ = max_k Σ_{s<=k} y_{ī,s};
/// k_e = max{k : ε = -Σ_{s>=k} y_{ī,s}}, k_f = min{k : φ = Σ_{s<=k} y_{ī,s}}.
MonomialStats monomial_stats(const Monomial& monomial, int modulus,
                             int residue);

/// Case-analysis operators: f = A_{c;ī,k_f}^{-1}·M when φ > 0,
/// e = A_{c;ī,k_e-K}·M when ε > 0; nullopt otherwise.
std::optional<Monomial> lower_direct(const EdgeConstants& constants,
                                     const Monomial& monomial, int residue);
std::optional<Monomial> raise_direct(const EdgeConstants& constants,
                                     const Monomial& monomial, int residue);

/// The bracket entries for one residue: (level, open) with one entry per
/// unit of exponent, in decreasing level order, before cancellation.
std::vector<std::pair<long, bool>> monomial_brackets(const Monomial& monomial,
                                                     int residue);

/// Bracket-rule operators: "(" per Y_{ī,k} factor, ")" per Y_{ī,k}^{-1}
/// factor in decreasing level order; f acts at the first uncanceled "(" from
/// the left, e at the first uncanceled ")" from the right (via A_{c;ī,k-K}).
std::optional<Monomial> lower_bracket(const EdgeConstants& constants,
                                      const Monomial& monomial, int residue);
std::optional<Monomial> raise_bracket(const EdgeConstants& constants,
                                      const Monomial& monomial, int residue);

/// Ψ(mp) = Π_{a addable} Y_{color(a),h(a)} · Π_{r removable}
/// Y_{color(r),h(r)+K}^{-1}, heights from the integral base. Requires an
/// integral plain datum (else std::invalid_argument).
Monomial psi(const SlopeDatum& datum, const MultiPartition& mp);

/// Dominant with all support levels spanning strictly less than level_span.
bool is_aligned_dominant(const Monomial& monomial, long level_span);

struct PsiMismatch {
  std::string vertex;  // canonical JSON of the offending vertex
  int residue = -1;
  std::string detail;
};

/// Checks over every vertex of the graph (generated with the row order of
/// the same integral aligned base):
///   - Ψ intertwines the lowering operators where the target stays in the
///     truncated graph, and the raising operators everywhere,
///   - the one-step relation Ψ(mp ⊔ b) = A_{c;color(b),h(b)}^{-1}·Ψ(mp) on
///     every edge,
///   - wt_ī(Ψ(v)) = w_ī - 2c_ī + c_{ī-1} + c_{ī+1}.
/// Returns nullopt when everything commutes.
std::optional<PsiMismatch> verify_psi_commutes(const SlopeDatum& integral_datum,
                                               const EdgeConstants& constants,
                                               const CrystalGraph& graph);

}  // namespace xicrystal
