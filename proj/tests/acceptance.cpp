// Acceptance runner: one PASS/FAIL line per criterion, optional criterion
// number as the only argument. Exit status is nonzero if any selected
// criterion fails.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "curvenbhd/table.hpp"
#include "curvenbhd/verify.hpp"

using namespace curvenbhd;

namespace {

struct Outcome {
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> notes;

  void absorb(const SweepResult& r) {
    cases += r.cases;
    if (!r.passed()) passed = false;
    for (std::size_t k = 0; k < r.failures.size() && k < 5; ++k) notes.push_back(r.failures[k]);
    if (r.failures.size() > 5) notes.push_back("... " + std::to_string(r.failures.size() - 5) + " more");
  }
};

std::vector<DynkinType> only(std::vector<DynkinType> types, std::initializer_list<Family> families) {
  std::erase_if(types, [&](const DynkinType& t) {
    return std::find(families.begin(), families.end(), t.family) == families.end();
  });
  return types;
}

Outcome sweep(const std::vector<DynkinType>& types, SweepResult (*check)(const RootSystem&)) {
  Outcome o;
  for (const auto& t : types) o.absorb(check(RootSystem(t)));
  return o;
}

std::vector<TableEntry> diff_rows(const std::vector<TableEntry>& got, const std::vector<TableEntry>& want) {
  std::vector<TableEntry> out;
  for (std::size_t k = 0; k < std::max(got.size(), want.size()); ++k)
    if (k >= got.size() || k >= want.size() || !(got[k] == want[k])) out.push_back(k < want.size() ? want[k] : got[k]);
  return out;
}

std::string show_delta(const std::vector<int>& d) {
  std::string s = "{";
  for (std::size_t k = 0; k < d.size(); ++k) s += (k ? "," : "") + std::string("b") + std::to_string(d[k]);
  return s + "}";
}

Outcome criterion_tables() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (const char* name : {"A3", "A4", "B2", "B3", "B4", "B5", "C2", "C3", "C4", "C5", "D4", "D5"}) {
    ++o.cases;
    const std::string path = std::string(CURVENBHD_GOLDEN_DIR) + "/table_" + name + ".json";
    std::ifstream in(path);
    if (!in) {
      o.passed = false;
      o.notes.push_back(std::string(name) + ": cannot open " + path);
      continue;
    }
    const auto golden = nlohmann::json::parse(in).get<CosmallTable>();
    const auto emitted = emit_table(DynkinType::parse(name));
    if (emitted == golden) {
      o.notes.push_back(std::string(name) + ": match");
      continue;
    }
    o.passed = false;
    std::ostringstream line;
    line << name << ": MISMATCH";
    std::vector<TableEntry> bad;
    for (const auto& [got, want] : {std::pair{&emitted.simple, &golden.simple}, {&emitted.long_roots, &golden.long_roots},
                                    {&emitted.short_roots, &golden.short_roots}, {&emitted.cosmall, &golden.cosmall}}) {
      for (const auto& e : diff_rows(*got, *want)) bad.push_back(e);
    }
    for (const auto& want : bad) {
      line << "  " << want.coords_e << " golden Delta=" << show_delta(want.delta_set);
      for (const auto& got : emitted.cosmall)
        if (got.root == want.root) line << " computed Delta=" << show_delta(got.delta_set);
    }
    o.notes.push_back(line.str());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 1.0) o.passed = false;
  std::ostringstream t;
  t << "runtime " << std::fixed << std::setprecision(3) << secs << " s (limit 1 s)";
  o.notes.push_back(t.str());
  return o;
}

Outcome criterion_recursion() {
  Outcome o;
  for (const auto& t : {DynkinType(Family::A, 2), DynkinType(Family::B, 2), DynkinType(Family::A, 3)})
    o.absorb(check_recursion_exhaustive(RootSystem(t)));
  for (const auto& t : {DynkinType(Family::B, 4), DynkinType(Family::C, 4), DynkinType(Family::D, 4)})
    o.absorb(check_recursion_sampled(RootSystem(t), 10000, kDefaultSeed));
  return o;
}

Outcome criterion_hecke() {
  Outcome o;
  for (const auto& t : types_in_range(1, 4, true)) {
    const RootSystem rs(t);
    if (enumerate_group(rs).size() <= 24) o.absorb(check_hecke_exhaustive(rs, true));
  }
  return o;
}

Outcome criterion_counts() {
  Outcome o;
  for (const auto& t : types_in_range(1, 10, true)) o.absorb(check_counts(RootSystem(t)));
  // Closed forms alone at the largest supported ranks.
  for (const auto& t : types_in_range(11, kMaxRank, false)) {
    ++o.cases;
    const RootSystem rs(t);
    const long l = t.rank;
    const long expected = t.family == Family::A   ? (l + 1) * l
                          : t.family == Family::D ? 2 * l * (l - 1)
                                                  : 2 * l * l;
    if (static_cast<long>(rs.roots().size()) != expected) {
      o.passed = false;
      o.notes.push_back(t.name() + ": |R| = " + std::to_string(rs.roots().size()));
    }
    if (length(rs, longest_element(rs)) != static_cast<long>(rs.positive_roots().size())) {
      o.passed = false;
      o.notes.push_back(t.name() + ": l(w0) != |R+|");
    }
  }
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "cosmall tables match golden rows (A3,A4,B2-B5,C2-C5,D4,D5), < 1 s", criterion_tables},
      {2, "P-cosmall definition equals the Delta criterion, classical rank <= 5",
       [] { return sweep(types_in_range(1, 5, false), check_cosmall_criterion); }},
      {3, "P-cosmall iff coset match and greedy length 1, classical rank <= 5",
       [] { return sweep(types_in_range(1, 5, false), check_cosmall_coset); }},
      {4, "greedy length 1 for single coroot classes, A and D rank <= 5",
       [] { return sweep(only(types_in_range(1, 5, false), {Family::A, Family::D}), check_single_root_classes); }},
      {5, "root string endpoints never shorter, all types rank <= 5",
       [] { return sweep(types_in_range(1, 5, true), check_string_endpoints); }},
      {6, "short cosmall roots dominate no root of Delta, B/C rank <= 5, F4, G2",
       [] {
         return sweep(only(types_in_range(1, 5, true), {Family::B, Family::C, Family::F, Family::G}),
                      check_short_cosmall_delta);
       }},
      {7, "closed form equals recursion: exhaustive A2,B2,A3; 10^4 samples B4,C4,D4", criterion_recursion},
      {8, "Hecke product properties, exhaustive for |W| <= 24", criterion_hecke},
      {9, "root-to-coset map injective on R+ minus R+_P, rank <= 4",
       [] { return sweep(types_in_range(1, 4, true), check_coset_injectivity); }},
      {10, "root counts and l(w0) = |R+| for every supported rank", criterion_counts},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  if (argc > 2 || (argc == 2 && (selected = std::atoi(argv[1])) < 1) || selected > 10) {
    std::cerr << "usage: acceptance [1-10]\n";
    return 2;
  }
  bool all_passed = true;
  for (const auto& c : criteria()) {
    if (selected != 0 && c.id != selected) continue;
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_passed = all_passed && o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.title << "  ["
              << o.cases << " cases, " << std::fixed << std::setprecision(2) << secs << " s]\n";
    for (const auto& n : o.notes) std::cout << "        " << n << '\n';
  }
  return all_passed ? 0 : 1;
}
