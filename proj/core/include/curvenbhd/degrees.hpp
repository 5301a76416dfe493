#pragma once

#include <vector>

#include "curvenbhd/rootsys.hpp"

namespace curvenbhd {

/// A class in ZΔ∨/ZΔ∨_P, stored as its coordinates on the simple coroots
/// outside Δ_P, in increasing index order. Carries its (type, Δ_P) context;
/// arithmetic across contexts throws ContextMismatch.
class Degree {
 public:
  Degree(DynkinType dynkin, ParabolicSubset parabolic, Coeffs coeffs);

  static Degree zero(const RootSystem& rs, const ParabolicSubset& parabolic);

  const DynkinType& dynkin() const noexcept { return dynkin_; }
  const ParabolicSubset& parabolic() const noexcept { return parabolic_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  /// The simple indices (1-based) labelling the coordinates.
  std::vector<int> indices() const;

  bool is_zero() const noexcept;
  bool is_effective() const noexcept;

  Degree operator+(const Degree& other) const;
  Degree operator-(const Degree& other) const;
  Degree scaled(int factor) const;

  void require_context(const RootSystem& rs, const ParabolicSubset& parabolic) const;

  friend bool operator==(const Degree&, const Degree&) = default;

 private:
  void require_same_context(const Degree& other) const;

  DynkinType dynkin_;
  ParabolicSubset parabolic_;
  Coeffs coeffs_;
};

/// Image of a coroot in ZΔ∨/ZΔ∨_P (drops the Δ_P coordinates).
Degree project(const RootSystem& rs, const Coroot& c, const ParabolicSubset& parabolic);
/// Shorthand for project(rs, coroot(rs, alpha), parabolic).
Degree project_root(const RootSystem& rs, const Root& alpha, const ParabolicSubset& parabolic);

/// Componentwise order; throws ContextMismatch across contexts.
bool degree_leq(const Degree& lhs, const Degree& rhs);

/// Maximal elements, for root_leq, of {α ∈ R+ \ R+_P : α∨ + ZΔ∨_P <= d}.
/// Sorted lexicographically.
std::vector<Root> maximal_roots(const RootSystem& rs, const Degree& d, const ParabolicSubset& parabolic);

struct GreedyDecomposition {
  std::vector<Root> parts;
  /// What is left once no maximal root remains; zero for every effective
  /// degree in practice.
  Degree residual;
};

/// Peels off maximal roots, taking the lexicographically smallest at each
/// step.
GreedyDecomposition greedy_decomposition(const RootSystem& rs, const Degree& d,
                                         const ParabolicSubset& parabolic);

/// All effective degrees e with 0 <= e <= bound, in lexicographic order.
std::vector<Degree> degrees_below(const Degree& bound);

}  // namespace curvenbhd
