#pragma once

#include <compare>
#include <span>
#include <vector>

#include "curvenbhd/rootsys.hpp"

namespace curvenbhd {

/// A Weyl group element in canonical form: the matrix of its action on the
/// simple-root basis. Column j holds the image of the j-th simple root.
/// Equality is matrix equality.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(int rank);
  /// Column-major entries, rank*rank of them.
  WeylElement(int rank, std::vector<int> columns);

  int rank() const noexcept { return rank_; }
  /// Image of the j-th simple root (1-based).
  std::span<const int> image_of_simple(int j) const {
    return {data_.data() + (j - 1) * rank_, static_cast<std::size_t>(rank_)};
  }
  Coeffs apply(std::span<const int> x) const;
  Root apply(const Root& alpha) const { return Root{apply(alpha.coeffs)}; }
  bool is_identity() const;
  /// True iff l(w s_i) < l(w), i.e. w(β_i) is negative.
  bool has_right_descent(int i) const;

  /// Ordinary group product.
  friend WeylElement operator*(const WeylElement& u, const WeylElement& v);
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

 private:
  int rank_ = 0;
  std::vector<int> data_;
};

/// Sequence of 1-based simple-reflection indices.
using Word = std::vector<int>;

WeylElement simple_reflection(const RootSystem& rs, int i);
/// s_α(x) = x - <x, α∨> α.
WeylElement reflection(const RootSystem& rs, const Root& alpha);
/// w·s_i as a group product.
WeylElement multiply_simple(const RootSystem& rs, const WeylElement& w, int i);
WeylElement from_word(const RootSystem& rs, const Word& word);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);
WeylElement longest_element(const RootSystem& rs);

/// Number of positive roots sent to negative roots.
int length(const RootSystem& rs, const WeylElement& w);
/// Positive roots α with w(α) < 0.
std::vector<Root> inversions(const RootSystem& rs, const WeylElement& w);

/// Reduced word built from the right, always stripping the smallest right
/// descent first.
Word reduced_word(const RootSystem& rs, const WeylElement& w);

/// u·s_i in the Hecke (Demazure) monoid: us_i when that is longer, else u.
WeylElement hecke_step(const RootSystem& rs, const WeylElement& u, int i);
/// u·v, folding hecke_step over a reduced word of v, left to right.
WeylElement hecke_product(const RootSystem& rs, const WeylElement& u, const WeylElement& v);
WeylElement hecke_fold(const RootSystem& rs, const WeylElement& u, const Word& word);

/// Shortest element of w W_P.
WeylElement min_coset_rep(const RootSystem& rs, const WeylElement& w, const ParabolicSubset& parabolic);
bool same_coset(const RootSystem& rs, const WeylElement& u, const WeylElement& v,
                const ParabolicSubset& parabolic);

/// Bruhat order u <= w.
bool bruhat_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& w);

/// True iff every inversion of w lies in R+_P.
bool in_WP(const RootSystem& rs, const WeylElement& w, const ParabolicSubset& parabolic);

}  // namespace curvenbhd
