#pragma once

#include <map>
#include <span>
#include <vector>

#include "curvenbhd/types.hpp"

namespace curvenbhd {

/// Immutable table of all roots of a Dynkin type, stored in the simple-root
/// basis and ordered lexicographically on coefficient vectors.
///
/// Simple roots follow the usual Bourbaki numbering: for B_l, C_l, D_l the
/// last simple root is e_l, 2e_l and e_{l-1}+e_l respectively. The table is
/// produced by closing the simple roots under all simple reflections.
///
/// Squared lengths are normalized to {1, 2} for B, C, F, to {1, 3} for G and
/// to {2} for simply laced types.
class RootSystem {
 public:
  explicit RootSystem(DynkinType dynkin);

  const DynkinType& dynkin() const noexcept { return dynkin_; }
  int rank() const noexcept { return dynkin_.rank; }

  std::span<const Root> roots() const noexcept { return roots_; }
  std::span<const Root> positive_roots() const noexcept { return positive_; }

  /// i is 1-based.
  Root simple_root(int i) const;
  Root highest_root() const;

  /// Cartan integer <β_j, β_i∨>, 1-based.
  int cartan(int i, int j) const { return cartan_[(i - 1) * rank() + (j - 1)]; }

  /// (x, y) at the internal integral scale.
  int inner_product(std::span<const int> x, std::span<const int> y) const;

  /// <x, α∨> = 2(x, α)/(α, α); integral for x in the root lattice.
  int pairing(std::span<const int> x, const Root& alpha) const;

  bool contains(std::span<const int> coeffs) const;
  /// Throws DomainError when `alpha` is not in the table.
  void require_root(const Root& alpha) const;
  void require_positive_root(const Root& alpha) const;

  int squared_length(const Root& alpha) const;
  bool two_lengths() const noexcept { return max_length_ != min_length_; }
  bool is_long(const Root& alpha) const { return squared_length(alpha) == max_length_; }
  bool is_short(const Root& alpha) const { return two_lengths() && !is_long(alpha); }

 private:
  DynkinType dynkin_;
  std::vector<int> gram_;
  std::vector<int> cartan_;
  std::vector<Root> roots_;
  std::vector<Root> positive_;
  std::map<Coeffs, int> raw_length_;
  int raw_min_ = 0;
  int min_length_ = 0;
  int max_length_ = 0;
  int length_scale_ = 1;
};

/// α∨ = 2α/(α,α) expanded over the simple coroots.
Coroot coroot(const RootSystem& rs, const Root& alpha);

struct StringReach {
  int k = 0;
  Root endpoint;
};

/// Largest k >= 0 with α + kβ a root, together with that root.
/// Requires β ≠ ±α.
StringReach root_string_reach(const RootSystem& rs, const Root& alpha, const Root& beta);

/// Δ(α): 1-based indices of the simple roots β with α + β a root.
std::vector<int> delta_set(const RootSystem& rs, const Root& alpha);

/// Componentwise order on simple-root coefficients: alpha <= gamma.
bool root_leq(const Root& alpha, const Root& gamma);

}  // namespace curvenbhd
