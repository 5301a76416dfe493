#include "curvenbhd/verify.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "curvenbhd/cosmall.hpp"
#include "curvenbhd/curves.hpp"
#include "curvenbhd/literals.hpp"
#include "curvenbhd/table.hpp"

namespace curvenbhd {
namespace {

std::string show(const Root& r) { return "(" + format_coeffs(r.coeffs) + ")"; }
std::string show(const RootSystem& rs, const WeylElement& w) { return "[" + format_word(reduced_word(rs, w)) + "]"; }
std::string show(const ParabolicSubset& p) { return "{" + format_parabolic(p) + "}"; }

std::string context(const RootSystem& rs) { return rs.dynkin().name() + ": "; }

std::vector<ParabolicSubset> all_parabolics(int rank) {
  std::vector<ParabolicSubset> out;
  for (std::uint32_t m = 0; m < (1u << rank); ++m) out.push_back(ParabolicSubset::from_mask(m));
  return out;
}

std::size_t closed_form_root_count(const DynkinType& t) {
  const std::size_t l = t.rank;
  switch (t.family) {
    case Family::A: return (l + 1) * l;  // l(l-1) with l = rank+1
    case Family::B:
    case Family::C: return 2 * l * l;
    case Family::D: return 2 * l * (l - 1);
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

Degree saturation_bound(const RootSystem& rs, const ParabolicSubset& p) {
  return project_root(rs, rs.highest_root(), p).scaled(2);
}

// Twice the highest coroot (the componentwise maximum of all positive
// coroots). Differs from 2·θ∨ in type C, where θ is long and its coroot short.
Degree coroot_saturation_bound(const RootSystem& rs, const ParabolicSubset& p) {
  Coeffs top(rs.rank(), 0);
  for (const Root& a : rs.positive_roots()) {
    const Coroot c = coroot(rs, a);
    for (int i = 0; i < rs.rank(); ++i) top[i] = std::max(top[i], c.coeffs[i]);
  }
  return project(rs, Coroot{top}, p).scaled(2);
}

Degree unit_degree(const Degree& like, std::size_t k) {
  Coeffs c(like.coeffs().size(), 0);
  c[k] = 1;
  return Degree(like.dynkin(), like.parabolic(), std::move(c));
}

WeylElement random_element(const RootSystem& rs, std::mt19937_64& rng) {
  const int n = static_cast<int>(rs.positive_roots().size());
  std::uniform_int_distribution<int> len(0, 2 * n);
  std::uniform_int_distribution<int> letter(1, rs.rank());
  WeylElement w = WeylElement::identity(rs.rank());
  for (int k = len(rng); k > 0; --k) w = multiply_simple(rs, w, letter(rng));
  return w;
}

Degree random_degree_below(const Degree& bound, std::mt19937_64& rng) {
  Coeffs c(bound.coeffs().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = std::uniform_int_distribution<int>(0, bound.coeffs()[k])(rng);
  return Degree(bound.dynkin(), bound.parabolic(), std::move(c));
}

Word random_reduced_word(const RootSystem& rs, const WeylElement& w, std::mt19937_64& rng) {
  Word reversed;
  WeylElement cur = w;
  while (true) {
    std::vector<int> descents;
    for (int i = 1; i <= rs.rank(); ++i)
      if (cur.has_right_descent(i)) descents.push_back(i);
    if (descents.empty()) break;
    int i = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(rng)];
    reversed.push_back(i);
    cur = multiply_simple(rs, cur, i);
  }
  std::ranges::reverse(reversed);
  return reversed;
}

// Shared body of the exhaustive and sampled recursion checks.
void check_recursion_case(const RootSystem& rs, const WeylElement& w, const Degree& d, const ParabolicSubset& p,
                         SweepResult& out) {
  ++out.cases;
  const SchubertClass direct = curve_neighborhood(rs, w, d, p);
  const auto reachable = curve_neighborhood_all_choices(rs, w, d, p);
  const auto describe = [&] {
    return context(rs) + "w=" + show(rs, w) + " d=(" + format_coeffs(d.coeffs()) + ") P=" + show(p);
  };
  if (reachable.size() != 1 || *reachable.begin() != direct.rep()) {
    std::string got;
    for (const auto& r : reachable) got += show(rs, r);
    out.fail(describe() + ": X(w·z) rep " + show(rs, direct.rep()) + " but recursion reaches " + got);
  }
  if (curve_neighborhood_recursive(rs, w, d, p) != direct) {
    out.fail(describe() + ": lex-smallest recursion disagrees with X(w·z)");
  }
  const WeylElement base = min_coset_rep(rs, w, p);
  if (!bruhat_leq(rs, base, direct.rep())) out.fail(describe() + ": X(w) not contained in its neighborhood");
  if (direct.dimension() < length(rs, base)) out.fail(describe() + ": neighborhood shrank");
}

}  // namespace

void SweepResult::merge(const SweepResult& other) {
  cases += other.cases;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

void SweepResult::fail(std::string message) { failures.push_back(std::move(message)); }

std::vector<DynkinType> types_in_range(int min_rank, int max_rank, bool exceptional) {
  std::vector<DynkinType> out;
  for (int r = std::max(min_rank, 1); r <= max_rank; ++r) {
    out.emplace_back(Family::A, r);
    if (r >= 2) out.emplace_back(Family::B, r);
    if (r >= 2) out.emplace_back(Family::C, r);
    if (r >= 4) out.emplace_back(Family::D, r);
    if (exceptional && r == 2) out.emplace_back(Family::G, 2);
    if (exceptional && r == 4) out.emplace_back(Family::F, 4);
  }
  return out;
}

std::vector<WeylElement> enumerate_group(const RootSystem& rs) {
  std::set<WeylElement> seen{WeylElement::identity(rs.rank())};
  std::deque<WeylElement> queue{WeylElement::identity(rs.rank())};
  while (!queue.empty()) {
    WeylElement w = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i <= rs.rank(); ++i) {
      WeylElement next = multiply_simple(rs, w, i);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Word> all_reduced_words(const RootSystem& rs, const WeylElement& w) {
  if (w.is_identity()) return {Word{}};
  std::vector<Word> out;
  for (int i = 1; i <= rs.rank(); ++i) {
    if (!w.has_right_descent(i)) continue;
    for (Word word : all_reduced_words(rs, multiply_simple(rs, w, i))) {
      word.push_back(i);
      out.push_back(std::move(word));
    }
  }
  return out;
}

SweepResult check_counts(const RootSystem& rs) {
  SweepResult out{"counts"};
  const auto roots = rs.roots();
  ++out.cases;
  if (roots.size() != closed_form_root_count(rs.dynkin())) {
    out.fail(context(rs) + "|R| = " + std::to_string(roots.size()) + ", expected " +
             std::to_string(closed_form_root_count(rs.dynkin())));
  }
  if (roots.size() != 2 * rs.positive_roots().size()) out.fail(context(rs) + "|R| != 2|R+|");
  ++out.cases;
  const int l0 = length(rs, longest_element(rs));
  if (l0 != static_cast<int>(rs.positive_roots().size())) {
    out.fail(context(rs) + "longest element has length " + std::to_string(l0));
  }
  std::set<int> lengths;
  for (const Root& a : roots) {
    ++out.cases;
    lengths.insert(rs.squared_length(a));
    if (!a.is_positive() && !a.is_negative()) out.fail(context(rs) + show(a) + " is neither positive nor negative");
    if (!rs.contains((-a).coeffs)) out.fail(context(rs) + "-" + show(a) + " missing");
    if (rs.pairing(a.coeffs, a) != 2) out.fail(context(rs) + "<a, a∨> != 2 for " + show(a));
    for (int i = 1; i <= rs.rank(); ++i) {
      if (!rs.contains(simple_reflection(rs, i).apply(a.coeffs))) {
        out.fail(context(rs) + "s_" + std::to_string(i) + show(a) + " not a root");
      }
    }
    for (const Root& b : roots) {
      if (b == a || b == -a) continue;
      // The b-string through a is unbroken: walk both ways and compare with a
      // scan over a generous window.
      int lo = 0, hi = 0;
      auto shifted = [&](int k) {
        Coeffs c = a.coeffs;
        for (int i = 0; i < rs.rank(); ++i) c[i] += k * b.coeffs[i];
        return c;
      };
      while (rs.contains(shifted(hi + 1))) ++hi;
      while (rs.contains(shifted(lo - 1))) --lo;
      for (int k = lo - 4; k <= hi + 4; ++k) {
        if ((k < lo || k > hi) && rs.contains(shifted(k))) {
          out.fail(context(rs) + "broken string through " + show(a) + " along " + show(b));
        }
      }
    }
    if (a.is_positive()) {
      for (int i : delta_set(rs, a)) {
        Coeffs c = a.coeffs;
        c[i - 1] += 1;
        if (!rs.contains(c)) out.fail(context(rs) + "delta_set member " + std::to_string(i) + " wrong for " + show(a));
      }
    }
  }
  if (lengths.size() > 2) out.fail(context(rs) + "more than two root lengths");
  return out;
}

SweepResult check_coset_injectivity(const RootSystem& rs) {
  SweepResult out{"lemma1"};
  for (const auto& p : all_parabolics(rs.rank())) {
    std::map<WeylElement, Root> seen;
    for (const Root& a : rs.positive_roots()) {
      if (in_parabolic_span(a, p)) continue;
      ++out.cases;
      auto [it, fresh] = seen.emplace(min_coset_rep(rs, reflection(rs, a), p), a);
      if (!fresh) {
        out.fail(context(rs) + "P=" + show(p) + ": " + show(a) + " and " + show(it->second) +
                 " share the coset s_a W_P");
      }
    }
  }
  return out;
}

SweepResult check_single_root_classes(const RootSystem& rs) {
  SweepResult out{"lemma2"};
  for (const auto& p : all_parabolics(rs.rank())) {
    for (const Root& a : rs.positive_roots()) {
      if (in_parabolic_span(a, p)) continue;
      ++out.cases;
      const auto g = greedy_decomposition(rs, project_root(rs, a, p), p);
      if (g.parts.size() != 1) {
        out.fail(context(rs) + "P=" + show(p) + " alpha=" + show(a) + ": greedy length " +
                 std::to_string(g.parts.size()));
      }
    }
  }
  return out;
}

SweepResult check_string_endpoints(const RootSystem& rs) {
  SweepResult out{"lemma3"};
  for (const Root& a : rs.roots()) {
    for (const Root& b : rs.roots()) {
      if (b == a || b == -a) continue;
      ++out.cases;
      const auto reach = root_string_reach(rs, a, b);
      if (rs.squared_length(reach.endpoint) < rs.squared_length(a)) {
        out.fail(context(rs) + "string of " + show(b) + " through " + show(a) + " ends at shorter root " +
                 show(reach.endpoint));
      }
    }
  }
  return out;
}

SweepResult check_short_cosmall_delta(const RootSystem& rs) {
  SweepResult out{"lemma4"};
  for (const Root& a : rs.positive_roots()) {
    if (!rs.is_short(a) || !is_cosmall(rs, a)) continue;
    out.cases += delta_set(rs, a).size();
  }
  if (auto cex = find_short_cosmall_violation(rs)) {
    out.fail(context(rs) + "short cosmall " + show(cex->alpha) + " has b" + std::to_string(cex->simple_index) +
             " in Delta(alpha) below it");
  }
  return out;
}

SweepResult check_cosmall_coset(const RootSystem& rs) {
  SweepResult out{"theorem2"};
  for (const auto& p : all_parabolics(rs.rank())) {
    for (const Root& a : rs.positive_roots()) {
      if (in_parabolic_span(a, p)) continue;
      ++out.cases;
      const Degree d = project_root(rs, a, p);
      const bool p_cosmall = is_P_cosmall_definitional(rs, a, p).holds;
      const bool coset = same_coset(rs, z_P_d(rs, d, p), reflection(rs, a), p);
      const bool single = greedy_decomposition(rs, d, p).parts.size() == 1;
      const std::string where = context(rs) + "P=" + show(p) + " alpha=" + show(a);
      if (p_cosmall != (coset && single)) {
        out.fail(where + ": P-cosmall=" + (p_cosmall ? "true" : "false") + " but coset match=" +
                 (coset ? "true" : "false") + ", greedy length 1=" + (single ? "true" : "false"));
      }
      if (rs.dynkin().simply_laced() && p_cosmall != coset) {
        out.fail(where + ": simply laced, P-cosmall differs from coset match");
      }
    }
  }
  return out;
}

SweepResult check_cosmall_criterion(const RootSystem& rs) {
  SweepResult out{"theorem3"};
  for (const auto& p : all_parabolics(rs.rank())) {
    for (const Root& a : rs.positive_roots()) {
      if (in_parabolic_span(a, p)) continue;
      const std::string where = context(rs) + "P=" + show(p) + " alpha=" + show(a);
      const Verdict def = is_P_cosmall_definitional(rs, a, p);
      const Verdict cos = is_cosmall(rs, a);
      if (def && !cos) out.fail(where + ": P-cosmall but not cosmall");
      if (!def) {
        const auto& g = def.witness;
        if (!g || !(*g != a && root_leq(a, *g)) ||
            !degree_leq(project_root(rs, *g, p), project_root(rs, a, p))) {
          out.fail(where + ": negative verdict without a valid witness");
        }
      }
      if (!cos) continue;
      ++out.cases;
      const bool crit = is_P_cosmall_criterion(rs, a, p);
      if (crit != def.holds) {
        out.fail(where + ": definition says " + (def.holds ? "P-cosmall" : "not P-cosmall") +
                 ", Delta criterion says " + (crit ? "P-cosmall" : "not P-cosmall"));
      }
    }
  }
  return out;
}

SweepResult check_recursion_exhaustive(const RootSystem& rs) {
  SweepResult out{"theorem1"};
  const auto group = enumerate_group(rs);
  for (const auto& p : all_parabolics(rs.rank())) {
    const auto degrees = degrees_below(saturation_bound(rs, p));
    for (const WeylElement& w : group) {
      std::map<Coeffs, WeylElement> reps;
      for (const Degree& d : degrees) {
        check_recursion_case(rs, w, d, p, out);
        reps.emplace(d.coeffs(), curve_neighborhood(rs, w, d, p).rep());
      }
      // Monotone in d along unit steps, hence everywhere.
      for (const auto& [c, rep] : reps) {
        for (std::size_t k = 0; k < c.size(); ++k) {
          Coeffs up = c;
          ++up[k];
          auto it = reps.find(up);
          if (it != reps.end() && !bruhat_leq(rs, rep, it->second)) {
            out.fail(context(rs) + "w=" + show(rs, w) + " P=" + show(p) + ": neighborhood not monotone from (" +
                     format_coeffs(c) + ") to (" + format_coeffs(up) + ")");
          }
        }
      }
    }
  }
  return out;
}

SweepResult check_recursion_sampled(const RootSystem& rs, std::size_t samples, std::uint64_t seed) {
  SweepResult out{"theorem1"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> mask(0, (1u << rs.rank()) - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto p = ParabolicSubset::from_mask(mask(rng));
    const WeylElement w = random_element(rs, rng);
    const Degree d = random_degree_below(saturation_bound(rs, p), rng);
    check_recursion_case(rs, w, d, p, out);
  }
  return out;
}

SweepResult check_saturation(const RootSystem& rs) {
  SweepResult out{"saturation"};
  const WeylElement w0 = longest_element(rs);
  for (const auto& p : all_parabolics(rs.rank())) {
    const WeylElement top = min_coset_rep(rs, w0, p);
    const Degree bound = coroot_saturation_bound(rs, p);
    std::vector<Degree> probes{bound};
    for (std::size_t k = 0; k < bound.coeffs().size(); ++k) probes.push_back(bound + unit_degree(bound, k));
    for (const Degree& d : probes) {
      ++out.cases;
      if (z_P_d(rs, d, p) != top) {
        out.fail(context(rs) + "P=" + show(p) + " d=(" + format_coeffs(d.coeffs()) +
                 "): z^P_d is not the longest coset representative");
      }
    }
  }
  return out;
}

SweepResult check_hecke_exhaustive(const RootSystem& rs, bool associativity) {
  SweepResult out{"hecke"};
  const auto group = enumerate_group(rs);
  std::map<WeylElement, std::vector<Word>> words;
  for (const auto& v : group) words.emplace(v, all_reduced_words(rs, v));

  for (int i = 1; i <= rs.rank(); ++i) {
    ++out.cases;
    const WeylElement s = simple_reflection(rs, i);
    if (hecke_product(rs, s, s) != s) out.fail(context(rs) + "s_" + std::to_string(i) + "·s_" + std::to_string(i) + " != s");
  }
  for (const auto& u : group) {
    const int lu = length(rs, u);
    for (const auto& v : group) {
      ++out.cases;
      const WeylElement p = hecke_product(rs, u, v);
      const std::string where = context(rs) + "u=" + show(rs, u) + " v=" + show(rs, v);
      for (const Word& word : words.at(v)) {
        if (hecke_fold(rs, u, word) != p) out.fail(where + ": product depends on the word [" + format_word(word) + "]");
      }
      if (!bruhat_leq(rs, u, p) || !bruhat_leq(rs, v, p)) out.fail(where + ": product not above both factors");
      const int lp = length(rs, p), lv = length(rs, v);
      if (lp > lu + lv) out.fail(where + ": length exceeds l(u)+l(v)");
      if (length(rs, u * v) == lu + lv && p != u * v) out.fail(where + ": disagrees with length-additive product");
      if (!associativity) continue;
      for (const auto& x : group) {
        if (hecke_product(rs, p, x) != hecke_product(rs, u, hecke_product(rs, v, x))) {
          out.fail(where + " x=" + show(rs, x) + ": not associative");
        }
      }
    }
  }
  return out;
}

SweepResult check_hecke_sampled(const RootSystem& rs, std::size_t samples, std::uint64_t seed) {
  SweepResult out{"hecke"};
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    ++out.cases;
    const WeylElement u = random_element(rs, rng), v = random_element(rs, rng), x = random_element(rs, rng);
    const WeylElement p = hecke_product(rs, u, v);
    const std::string where = context(rs) + "u=" + show(rs, u) + " v=" + show(rs, v);
    if (hecke_fold(rs, u, random_reduced_word(rs, v, rng)) != p) out.fail(where + ": product depends on the word");
    if (hecke_product(rs, p, x) != hecke_product(rs, u, hecke_product(rs, v, x))) out.fail(where + ": not associative");
    if (!bruhat_leq(rs, u, p) || !bruhat_leq(rs, v, p)) out.fail(where + ": product not above both factors");
  }
  return out;
}

SweepResult check_table_consistency(const DynkinType& dynkin) {
  SweepResult out{"tables"};
  const RootSystem rs(dynkin);
  const CosmallTable emitted = emit_table(dynkin);
  const CosmallTable table = nlohmann::json(emitted).get<CosmallTable>();
  const std::string where = dynkin.name() + ": ";
  if (!(table == emitted)) out.fail(where + "JSON round trip changed the table");

  std::map<Root, const TableEntry*> rows;
  for (const auto& e : table.cosmall) rows.emplace(e.root, &e);
  std::set<Root> long_set, short_set;
  for (const auto& e : table.long_roots) long_set.insert(e.root);
  for (const auto& e : table.short_roots) short_set.insert(e.root);

  for (const Root& a : rs.positive_roots()) {
    ++out.cases;
    const bool cos = is_cosmall(rs, a).holds;
    auto it = rows.find(a);
    if (cos != (it != rows.end())) out.fail(where + show(a) + " cosmall mismatch");
    if (it != rows.end()) {
      if (it->second->delta_set != delta_set(rs, a)) out.fail(where + show(a) + " delta_set mismatch");
      if (it->second->coords_e != format_ambient(ambient_coordinates(rs, a))) out.fail(where + show(a) + " coords mismatch");
    }
    if (rs.two_lengths()) {
      if (long_set.contains(a) != rs.is_long(a) || short_set.contains(a) != rs.is_short(a)) {
        out.fail(where + show(a) + " long/short mismatch");
      }
    }
  }
  return out;
}

SweepResult check_b2_c2_duality() {
  SweepResult out{"duality"};
  const CosmallTable b = emit_table(DynkinType(Family::B, 2));
  const CosmallTable c = emit_table(DynkinType(Family::C, 2));
  auto swap_root = [](Root r) {
    std::swap(r.coeffs[0], r.coeffs[1]);
    return r;
  };
  auto relabel = [&](const std::vector<TableEntry>& rows) {
    std::map<Root, std::vector<int>> m;
    for (const auto& e : rows) {
      std::vector<int> ds;
      for (int i : e.delta_set) ds.push_back(3 - i);
      std::ranges::sort(ds);
      m.emplace(swap_root(e.root), ds);
    }
    return m;
  };
  auto plain = [](const std::vector<TableEntry>& rows) {
    std::map<Root, std::vector<int>> m;
    for (const auto& e : rows) m.emplace(e.root, e.delta_set);
    return m;
  };
  const std::pair<const std::vector<TableEntry>*, const std::vector<TableEntry>*> pairs[] = {
      {&b.simple, &c.simple}, {&b.long_roots, &c.long_roots}, {&b.short_roots, &c.short_roots}, {&b.cosmall, &c.cosmall}};
  for (auto [lhs, rhs] : pairs) {
    ++out.cases;
    if (relabel(*lhs) != plain(*rhs)) out.fail("B2 and C2 tables differ after swapping b1 and b2");
  }
  return out;
}

std::vector<std::string> suite_names() {
  return {"counts", "lemma1", "lemma2", "lemma3", "lemma4", "theorem1",
          "theorem2", "theorem3", "hecke", "saturation", "tables", "duality"};
}

SweepResult run_suite(std::string_view name, const SweepOptions& options) {
  const int max_rank = options.max_rank;
  SweepResult out{std::string(name)};
  auto each = [&](const std::vector<DynkinType>& types, const std::function<SweepResult(const RootSystem&)>& f) {
    for (const auto& t : types) out.merge(f(RootSystem(t)));
  };
  auto only = [](std::vector<DynkinType> types, std::initializer_list<Family> families) {
    std::erase_if(types, [&](const DynkinType& t) { return std::ranges::find(families, t.family) == families.end(); });
    return types;
  };

  if (name == "counts") {
    each(types_in_range(1, max_rank, true), check_counts);
  } else if (name == "lemma1") {
    each(types_in_range(1, std::min(max_rank, 4), true), check_coset_injectivity);
  } else if (name == "lemma2") {
    each(only(types_in_range(1, max_rank, false), {Family::A, Family::D}), check_single_root_classes);
  } else if (name == "lemma3") {
    each(types_in_range(1, max_rank, true), check_string_endpoints);
  } else if (name == "lemma4") {
    each(only(types_in_range(1, max_rank, true), {Family::B, Family::C, Family::F, Family::G}), check_short_cosmall_delta);
  } else if (name == "theorem1") {
    for (const auto& t : types_in_range(1, max_rank, true)) {
      const RootSystem rs(t);
      out.merge(t.rank <= options.exhaustive_rank ? check_recursion_exhaustive(rs)
                                                  : check_recursion_sampled(rs, options.samples, options.seed));
    }
  } else if (name == "theorem2") {
    each(types_in_range(1, max_rank, true), check_cosmall_coset);
  } else if (name == "theorem3") {
    each(types_in_range(1, max_rank, true), check_cosmall_criterion);
  } else if (name == "hecke") {
    for (const auto& t : types_in_range(1, max_rank, true)) {
      const RootSystem rs(t);
      if (t.rank <= options.exhaustive_rank) {
        out.merge(check_hecke_exhaustive(rs, enumerate_group(rs).size() <= 24));
      } else {
        out.merge(check_hecke_sampled(rs, options.samples, options.seed));
      }
    }
  } else if (name == "saturation") {
    each(types_in_range(1, std::min(max_rank, 4), true), check_saturation);
  } else if (name == "tables") {
    for (const auto& t : types_in_range(1, max_rank, false)) out.merge(check_table_consistency(t));
  } else if (name == "duality") {
    if (max_rank >= 2) out.merge(check_b2_c2_duality());
  } else {
    throw InputError("unknown suite '" + std::string(name) + "'");
  }
  out.suite = std::string(name);
  return out;
}

}  // namespace curvenbhd
