#pragma once

#include <optional>
#include <vector>

#include "curvenbhd/degrees.hpp"

namespace curvenbhd {

/// A yes/no answer; negative answers carry the lexicographically smallest
/// dominating root γ > α whose coroot class is <= that of α.
struct Verdict {
  bool holds = false;
  std::optional<Root> witness;

  explicit operator bool() const noexcept { return holds; }
};

/// α is a maximal root of α∨ for P = B. Requires α ∈ R+.
Verdict is_cosmall(const RootSystem& rs, const Root& alpha);

/// α is a maximal root of α∨ + ZΔ∨_P. Requires α ∈ R+ \ R+_P.
Verdict is_P_cosmall_definitional(const RootSystem& rs, const Root& alpha,
                                  const ParabolicSubset& parabolic);

/// Δ(α) ∩ Δ_P = ∅ for a cosmall α ∈ R+ \ R+_P. Throws DomainError when α is
/// not cosmall or lies in R+_P.
bool is_P_cosmall_criterion(const RootSystem& rs, const Root& alpha, const ParabolicSubset& parabolic);

/// cosmall and criterion combined; usable on any α ∈ R+ \ R+_P.
Verdict is_P_cosmall(const RootSystem& rs, const Root& alpha, const ParabolicSubset& parabolic);

struct CosmallReport {
  DynkinType dynkin;
  ParabolicSubset parabolic;
  Root root;
  bool is_cosmall = false;
  std::optional<Root> cosmall_witness;
  std::vector<int> delta_set;
  /// Empty when α ∈ R+_P, where P-cosmallness is undefined.
  std::optional<bool> is_P_cosmall;
  std::optional<Root> P_cosmall_witness;

  friend bool operator==(const CosmallReport&, const CosmallReport&) = default;
};

CosmallReport cosmall_report(const RootSystem& rs, const Root& alpha, const ParabolicSubset& parabolic);

struct ShortCosmallViolation {
  Root alpha;
  int simple_index = 0;
};

/// For every short cosmall α and β ∈ Δ(α), checks β ≰ α. Returns the first
/// violation in lexicographic order, if any.
std::optional<ShortCosmallViolation> find_short_cosmall_violation(const RootSystem& rs);

}  // namespace curvenbhd
