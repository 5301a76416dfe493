#include "curvenbhd/curves.hpp"

#include <map>
#include <utility>

namespace curvenbhd {

SchubertClass::SchubertClass(const RootSystem& rs, const WeylElement& w, const ParabolicSubset& parabolic)
    : rep_(min_coset_rep(rs, w, parabolic)),
      dynkin_(rs.dynkin()),
      parabolic_(parabolic),
      dimension_(length(rs, rep_)) {}

WeylElement z_P_d(const RootSystem& rs, const Degree& d, const ParabolicSubset& parabolic) {
  WeylElement acc = WeylElement::identity(rs.rank());
  for (const Root& a : greedy_decomposition(rs, d, parabolic).parts)
    acc = hecke_product(rs, acc, reflection(rs, a));
  return min_coset_rep(rs, acc, parabolic);
}

SchubertClass curve_neighborhood(const RootSystem& rs, const WeylElement& w, const Degree& d,
                                 const ParabolicSubset& parabolic) {
  return SchubertClass(rs, hecke_product(rs, w, z_P_d(rs, d, parabolic)), parabolic);
}

SchubertClass curve_neighborhood_recursive(const RootSystem& rs, const WeylElement& w,
                                              const Degree& d, const ParabolicSubset& parabolic) {
  if (!d.is_effective()) throw DomainError("curve neighborhood needs an effective degree");
  WeylElement cur = w;
  Degree rest = d;
  while (true) {
    auto maxima = maximal_roots(rs, rest, parabolic);
    if (maxima.empty()) break;
    const Root& alpha = maxima.front();
    cur = hecke_product(rs, cur, reflection(rs, alpha));
    rest = rest - project_root(rs, alpha, parabolic);
  }
  return SchubertClass(rs, cur, parabolic);
}

namespace {

class ChoiceExplorer {
 public:
  ChoiceExplorer(const RootSystem& rs, const ParabolicSubset& parabolic) : rs_(rs), parabolic_(parabolic) {}

  const std::set<WeylElement>& explore(const WeylElement& w, const Degree& d) {
    auto key = std::make_pair(w, d.coeffs());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::set<WeylElement> out;
    auto maxima = maximal_roots(rs_, d, parabolic_);
    if (maxima.empty()) {
      out.insert(min_coset_rep(rs_, w, parabolic_));
    } else {
      for (const Root& alpha : maxima) {
        const auto& sub = explore(hecke_product(rs_, w, reflection(rs_, alpha)),
                                  d - project_root(rs_, alpha, parabolic_));
        out.insert(sub.begin(), sub.end());
      }
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

 private:
  const RootSystem& rs_;
  const ParabolicSubset& parabolic_;
  std::map<std::pair<WeylElement, Coeffs>, std::set<WeylElement>> memo_;
};

}  // namespace

std::set<WeylElement> curve_neighborhood_all_choices(const RootSystem& rs, const WeylElement& w,
                                                     const Degree& d,
                                                     const ParabolicSubset& parabolic) {
  if (!d.is_effective()) throw DomainError("curve neighborhood needs an effective degree");
  d.require_context(rs, parabolic);
  ChoiceExplorer explorer(rs, parabolic);
  return explorer.explore(w, d);
}

}  // namespace curvenbhd
