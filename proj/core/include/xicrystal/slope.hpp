#pragma once

#include "xicrystal/lex_scalar.hpp"
#include "xicrystal/partition.hpp"

#include <string>
#include <vector>

namespace xicrystal {

enum class SlopeMode { generic, row, row_prime, plain };

std::string to_string(SlopeMode mode);
SlopeMode slope_mode_from_string(const std::string& name);

/// The positive rational base entries (ξ_Ω, ξ_Ω̄, ξ_1..ξ_ℓ) of a slope datum.
struct SlopeBase {
  Rational omega;
  Rational omega_bar;
  std::vector<Rational> xi;
};

/// A slope datum: entries as LexScalars plus a mode tag. The perturbed modes
/// (generic, row, row_prime) attach infinitesimal coordinates to the base so
/// that distinct boxes never have equal heights:
///   generic, row:  ξ_Ω += eps(1), ξ_k += eps(ℓ+2-k)   (larger k dominates)
///   row_prime:     ξ_Ω -= eps(1), ξ_k += eps(k+1)     (smaller k dominates)
/// Restricted to boxes of equal base height, the induced order matches the
/// rational tie-break orders: row breaks ties by larger row then larger
/// component, row_prime by smaller row then smaller component.
class SlopeDatum {
 public:
  static SlopeDatum generic(SlopeBase base);
  static SlopeDatum row(SlopeBase base);
  static SlopeDatum row_prime(SlopeBase base);
  static SlopeDatum plain(SlopeBase base);
  static SlopeDatum make(SlopeMode mode, SlopeBase base);

  SlopeMode mode() const { return mode_; }
  bool perturbed() const { return mode_ != SlopeMode::plain; }
  int level() const { return static_cast<int>(xi_.size()); }

  const LexScalar& omega() const { return omega_; }
  const LexScalar& omega_bar() const { return omega_bar_; }
  /// ξ_k for a 1-based component index.
  const LexScalar& xi(int component) const;
  const SlopeBase& base() const { return base_; }

  /// h(b) = ξ_k + row·ξ_Ω + col·ξ_Ω̄.
  LexScalar height(const Box& box) const;

  /// Plain mode with all base entries positive integers.
  bool integral() const;

  /// |ξ_k - ξ_k'| < ξ_Ω + ξ_Ω̄ for all component pairs, evaluated strictly
  /// on the base parts (bases on the boundary do not count as aligned in
  /// perturbed modes).
  bool aligned() const;

  /// {"mode":...,"omega":"p/q","omega_bar":"p/q","xi":["p/q",...]}.
  std::string to_json() const;
  static SlopeDatum from_json(const std::string& text);

 private:
  SlopeDatum(SlopeMode mode, SlopeBase base);

  SlopeMode mode_;
  SlopeBase base_;
  LexScalar omega_;
  LexScalar omega_bar_;
  std::vector<LexScalar> xi_;
};

enum class BoxOrder {
  less,
  greater,
  same_box,
  tie,  // distinct boxes of equal height; possible only in plain mode
};

/// Compares boxes by height. Ties between distinct boxes are reported in
/// plain mode and throw std::logic_error in perturbed modes, where they are
/// impossible by construction.
BoxOrder compare_boxes(const SlopeDatum& datum, const Box& lhs,
                       const Box& rhs);

}  // namespace xicrystal
