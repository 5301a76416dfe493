#include "curvenbhd/degrees.hpp"

#include <algorithm>
#include <string>

#include "curvenbhd/literals.hpp"

namespace curvenbhd {

Degree::Degree(DynkinType dynkin, ParabolicSubset parabolic, Coeffs coeffs)
    : dynkin_(dynkin), parabolic_(parabolic), coeffs_(std::move(coeffs)) {
  parabolic_.validate(dynkin_.rank);
  const auto expected = static_cast<std::size_t>(dynkin_.rank) - parabolic_.members().size();
  if (coeffs_.size() != expected) {
    throw InputError("degree has " + std::to_string(coeffs_.size()) + " coordinates, expected " +
                     std::to_string(expected) + " (one per simple root outside the parabolic subset)");
  }
}

Degree Degree::zero(const RootSystem& rs, const ParabolicSubset& parabolic) {
  parabolic.validate(rs.rank());
  return Degree(rs.dynkin(), parabolic, Coeffs(rs.rank() - parabolic.members().size(), 0));
}

std::vector<int> Degree::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= dynkin_.rank; ++i)
    if (!parabolic_.contains(i)) out.push_back(i);
  return out;
}

bool Degree::is_zero() const noexcept {
  return std::ranges::all_of(coeffs_, [](int c) { return c == 0; });
}

bool Degree::is_effective() const noexcept {
  return std::ranges::all_of(coeffs_, [](int c) { return c >= 0; });
}

void Degree::require_same_context(const Degree& other) const {
  if (dynkin_ != other.dynkin_ || parabolic_ != other.parabolic_) {
    throw ContextMismatch("degrees from different contexts: " + dynkin_.name() + " P={" +
                          format_parabolic(parabolic_) + "} vs " + other.dynkin_.name() + " P={" +
                          format_parabolic(other.parabolic_) + "}");
  }
}

void Degree::require_context(const RootSystem& rs, const ParabolicSubset& parabolic) const {
  if (dynkin_ != rs.dynkin() || parabolic_ != parabolic) {
    throw ContextMismatch("degree context " + dynkin_.name() + " P={" + format_parabolic(parabolic_) +
                          "} does not match query context " + rs.dynkin().name() + " P={" +
                          format_parabolic(parabolic) + "}");
  }
}

Degree Degree::operator+(const Degree& other) const {
  require_same_context(other);
  Degree out = *this;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] += other.coeffs_[k];
  return out;
}

Degree Degree::operator-(const Degree& other) const {
  require_same_context(other);
  Degree out = *this;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] -= other.coeffs_[k];
  return out;
}

Degree Degree::scaled(int factor) const {
  Degree out = *this;
  for (int& c : out.coeffs_) c *= factor;
  return out;
}

Degree project(const RootSystem& rs, const Coroot& c, const ParabolicSubset& parabolic) {
  parabolic.validate(rs.rank());
  if (static_cast<int>(c.coeffs.size()) != rs.rank()) throw DomainError("coroot has wrong rank");
  Coeffs out;
  for (int i = 1; i <= rs.rank(); ++i)
    if (!parabolic.contains(i)) out.push_back(c.coeffs[i - 1]);
  return Degree(rs.dynkin(), parabolic, std::move(out));
}

Degree project_root(const RootSystem& rs, const Root& alpha, const ParabolicSubset& parabolic) {
  return project(rs, coroot(rs, alpha), parabolic);
}

bool degree_leq(const Degree& lhs, const Degree& rhs) {
  // Context is checked by the subtraction.
  return (rhs - lhs).is_effective();
}

std::vector<Root> maximal_roots(const RootSystem& rs, const Degree& d, const ParabolicSubset& parabolic) {
  d.require_context(rs, parabolic);
  std::vector<Root> candidates;
  for (const Root& a : rs.positive_roots()) {
    if (in_parabolic_span(a, parabolic)) continue;
    if (degree_leq(project_root(rs, a, parabolic), d)) candidates.push_back(a);
  }
  std::vector<Root> out;
  for (const Root& a : candidates) {
    const bool dominated = std::ranges::any_of(
        candidates, [&](const Root& g) { return g != a && root_leq(a, g); });
    if (!dominated) out.push_back(a);
  }
  return out;  // positive_roots() is already lexicographic
}

GreedyDecomposition greedy_decomposition(const RootSystem& rs, const Degree& d,
                                         const ParabolicSubset& parabolic) {
  if (!d.is_effective()) throw DomainError("greedy decomposition needs an effective degree");
  GreedyDecomposition out{{}, d};
  while (true) {
    auto maxima = maximal_roots(rs, out.residual, parabolic);
    if (maxima.empty()) break;
    out.residual = out.residual - project_root(rs, maxima.front(), parabolic);
    out.parts.push_back(std::move(maxima.front()));
  }
  return out;
}

std::vector<Degree> degrees_below(const Degree& bound) {
  std::vector<Degree> out;
  Coeffs cur(bound.coeffs().size(), 0);
  if (!bound.is_effective()) return out;
  while (true) {
    out.emplace_back(bound.dynkin(), bound.parabolic(), cur);
    // Odometer increment, last coordinate fastest.
    int k = static_cast<int>(cur.size()) - 1;
    while (k >= 0 && cur[k] == bound.coeffs()[k]) cur[k--] = 0;
    if (k < 0) break;
    ++cur[k];
  }
  return out;
}

}  // namespace curvenbhd
