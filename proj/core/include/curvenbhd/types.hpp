#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace curvenbhd {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed literal or out-of-range user input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A precondition on mathematical data was violated (e.g. a vector that is
/// not a root).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two degrees (or a degree and a query) belong to different (type, rank,
/// parabolic) contexts.
class ContextMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Integer coefficients over the simple (co)root basis; entry k is the
/// coefficient of the (k+1)-th simple (co)root.
using Coeffs = std::vector<int>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', F = 'F', G = 'G' };

/// Dynkin type and rank. A_n is indexed by its number of simple roots n.
struct DynkinType {
  Family family = Family::A;
  int rank = 1;

  DynkinType() = default;
  /// Throws InputError for ranks the family does not admit
  /// (A >= 1, B/C >= 2, D >= 4, F = 4, G = 2).
  DynkinType(Family family, int rank);

  /// Parses literals such as "B4" or "a3".
  static DynkinType parse(std::string_view literal);

  std::string name() const;
  bool is_classical() const noexcept;
  bool simply_laced() const noexcept;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

/// Largest rank accepted anywhere; parabolic subsets are stored as bitmasks.
inline constexpr int kMaxRank = 24;

/// A positive or negative root, in the simple-root basis.
struct Root {
  Coeffs coeffs;

  int rank() const noexcept { return static_cast<int>(coeffs.size()); }
  bool is_positive() const noexcept;
  bool is_negative() const noexcept;
  int height() const noexcept;
  Root operator-() const;

  friend auto operator<=>(const Root&, const Root&) = default;
};

/// A coroot, in the simple-coroot basis.
struct Coroot {
  Coeffs coeffs;

  friend auto operator<=>(const Coroot&, const Coroot&) = default;
};

/// The subset Δ_P of simple roots, 1-based.
class ParabolicSubset {
 public:
  ParabolicSubset() = default;
  ParabolicSubset(std::initializer_list<int> members);
  explicit ParabolicSubset(const std::vector<int>& members);

  static ParabolicSubset from_mask(std::uint32_t mask) {
    ParabolicSubset p;
    p.mask_ = mask;
    return p;
  }

  bool contains(int index) const noexcept {
    return index >= 1 && index <= 32 && ((mask_ >> (index - 1)) & 1u) != 0;
  }
  bool empty() const noexcept { return mask_ == 0; }
  std::uint32_t mask() const noexcept { return mask_; }
  std::vector<int> members() const;

  /// Throws InputError unless every member is at most `rank`.
  void validate(int rank) const;

  friend bool operator==(const ParabolicSubset&, const ParabolicSubset&) = default;
  friend auto operator<=>(const ParabolicSubset&, const ParabolicSubset&) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// True iff the root lies in the span of Δ_P.
bool in_parabolic_span(const Root& root, const ParabolicSubset& parabolic);

}  // namespace curvenbhd
