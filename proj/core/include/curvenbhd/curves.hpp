#pragma once

#include <set>

#include "curvenbhd/degrees.hpp"
#include "curvenbhd/weyl.hpp"

namespace curvenbhd {

/// A Schubert variety X(w) in G/P, held by its minimal coset representative.
class SchubertClass {
 public:
  SchubertClass(const RootSystem& rs, const WeylElement& w, const ParabolicSubset& parabolic);

  const WeylElement& rep() const noexcept { return rep_; }
  const DynkinType& dynkin() const noexcept { return dynkin_; }
  const ParabolicSubset& parabolic() const noexcept { return parabolic_; }
  /// dim X(w) = l(w) for the minimal representative.
  int dimension() const noexcept { return dimension_; }

  friend bool operator==(const SchubertClass&, const SchubertClass&) = default;

 private:
  WeylElement rep_;
  DynkinType dynkin_;
  ParabolicSubset parabolic_;
  int dimension_ = 0;
};

/// z^P_d: the Hecke product s_{α_1}·...·s_{α_k} of the greedy parts of d,
/// reduced to its minimal coset representative.
WeylElement z_P_d(const RootSystem& rs, const Degree& d, const ParabolicSubset& parabolic);

/// Γ_d(X(w)) = X(w·z^P_d).
SchubertClass curve_neighborhood(const RootSystem& rs, const WeylElement& w, const Degree& d,
                                 const ParabolicSubset& parabolic);

/// Γ_d(X(w)) by repeatedly replacing (w, d) with (w·s_α, d - α∨) for the
/// lexicographically smallest maximal root α of d.
SchubertClass curve_neighborhood_recursive(const RootSystem& rs, const WeylElement& w,
                                              const Degree& d, const ParabolicSubset& parabolic);

/// Every final representative the same recursion can reach when the maximal
/// root is chosen freely at each step. A single element when the recursion is
/// choice-independent.
std::set<WeylElement> curve_neighborhood_all_choices(const RootSystem& rs, const WeylElement& w,
                                                     const Degree& d,
                                                     const ParabolicSubset& parabolic);

}  // namespace curvenbhd
