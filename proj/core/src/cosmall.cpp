#include "curvenbhd/cosmall.hpp"

#include <algorithm>

#include "curvenbhd/literals.hpp"

namespace curvenbhd {
namespace {

// Smallest γ > α (root order) with γ∨ + ZΔ∨_P <= α∨ + ZΔ∨_P.
std::optional<Root> dominating_root(const RootSystem& rs, const Root& alpha, const ParabolicSubset& parabolic) {
  const Degree target = project_root(rs, alpha, parabolic);
  for (const Root& g : rs.positive_roots()) {
    if (g == alpha || !root_leq(alpha, g)) continue;
    if (degree_leq(project_root(rs, g, parabolic), target)) return g;
  }
  return std::nullopt;
}

void require_outside_parabolic(const Root& alpha, const ParabolicSubset& parabolic) {
  if (in_parabolic_span(alpha, parabolic)) {
    throw DomainError("(" + format_coeffs(alpha.coeffs) + ") lies in R+_P for P={" +
                      format_parabolic(parabolic) + "}");
  }
}

}  // namespace

Verdict is_cosmall(const RootSystem& rs, const Root& alpha) {
  rs.require_positive_root(alpha);
  auto witness = dominating_root(rs, alpha, ParabolicSubset{});
  return Verdict{!witness.has_value(), witness};
}

Verdict is_P_cosmall_definitional(const RootSystem& rs, const Root& alpha, const ParabolicSubset& parabolic) {
  rs.require_positive_root(alpha);
  parabolic.validate(rs.rank());
  require_outside_parabolic(alpha, parabolic);
  const auto maxima = maximal_roots(rs, project_root(rs, alpha, parabolic), parabolic);
  if (std::ranges::find(maxima, alpha) != maxima.end()) return Verdict{true, std::nullopt};
  return Verdict{false, dominating_root(rs, alpha, parabolic)};
}

bool is_P_cosmall_criterion(const RootSystem& rs, const Root& alpha, const ParabolicSubset& parabolic) {
  rs.require_positive_root(alpha);
  parabolic.validate(rs.rank());
  require_outside_parabolic(alpha, parabolic);
  if (!is_cosmall(rs, alpha)) {
    throw DomainError("(" + format_coeffs(alpha.coeffs) + ") is not cosmall; the Δ(α) criterion does not apply");
  }
  return std::ranges::none_of(delta_set(rs, alpha), [&](int i) { return parabolic.contains(i); });
}

Verdict is_P_cosmall(const RootSystem& rs, const Root& alpha, const ParabolicSubset& parabolic) {
  rs.require_positive_root(alpha);
  require_outside_parabolic(alpha, parabolic);
  if (Verdict c = is_cosmall(rs, alpha); !c) return c;
  if (is_P_cosmall_criterion(rs, alpha, parabolic)) return Verdict{true, std::nullopt};
  return Verdict{false, dominating_root(rs, alpha, parabolic)};
}

CosmallReport cosmall_report(const RootSystem& rs, const Root& alpha, const ParabolicSubset& parabolic) {
  rs.require_positive_root(alpha);
  parabolic.validate(rs.rank());
  CosmallReport report;
  report.dynkin = rs.dynkin();
  report.parabolic = parabolic;
  report.root = alpha;
  const Verdict c = is_cosmall(rs, alpha);
  report.is_cosmall = c.holds;
  report.cosmall_witness = c.witness;
  report.delta_set = delta_set(rs, alpha);
  if (!in_parabolic_span(alpha, parabolic)) {
    const Verdict p = is_P_cosmall(rs, alpha, parabolic);
    report.is_P_cosmall = p.holds;
    report.P_cosmall_witness = p.witness;
  }
  return report;
}

std::optional<ShortCosmallViolation> find_short_cosmall_violation(const RootSystem& rs) {
  for (const Root& alpha : rs.positive_roots()) {
    if (!rs.is_short(alpha) || !is_cosmall(rs, alpha)) continue;
    for (int i : delta_set(rs, alpha))
      if (root_leq(rs.simple_root(i), alpha)) return ShortCosmallViolation{alpha, i};
  }
  return std::nullopt;
}

}  // namespace curvenbhd
