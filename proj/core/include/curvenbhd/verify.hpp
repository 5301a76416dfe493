#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curvenbhd/rootsys.hpp"
#include "curvenbhd/weyl.hpp"

namespace curvenbhd {

inline constexpr std::uint64_t kDefaultSeed = 20161018;

/// Exhaustive and sampled checks of the structural results on curve
/// neighborhoods and cosmall roots. Each check returns the number of cases it
/// examined and a description of every counterexample.
struct SweepResult {
  SweepResult() = default;
  explicit SweepResult(std::string name) : suite(std::move(name)) {}

  std::string suite;
  std::size_t cases = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
  void merge(const SweepResult& other);
  void fail(std::string message);
};

struct SweepOptions {
  int max_rank = 3;
  /// Groups of rank at most this are swept exhaustively; larger ranks are
  /// sampled.
  int exhaustive_rank = 3;
  std::size_t samples = 1000;
  std::uint64_t seed = kDefaultSeed;
};

/// All supported types of rank in [min_rank, max_rank]; F4 and G2 only when
/// `exceptional` is set.
std::vector<DynkinType> types_in_range(int min_rank, int max_rank, bool exceptional);

/// Breadth-first enumeration of W. Intended for small ranks only.
std::vector<WeylElement> enumerate_group(const RootSystem& rs);
/// Every reduced word of w.
std::vector<Word> all_reduced_words(const RootSystem& rs, const WeylElement& w);

// Per-root-system checks.
SweepResult check_counts(const RootSystem& rs);
SweepResult check_coset_injectivity(const RootSystem& rs);
SweepResult check_single_root_classes(const RootSystem& rs);
SweepResult check_string_endpoints(const RootSystem& rs);
SweepResult check_short_cosmall_delta(const RootSystem& rs);
SweepResult check_cosmall_coset(const RootSystem& rs);
SweepResult check_cosmall_criterion(const RootSystem& rs);
SweepResult check_recursion_exhaustive(const RootSystem& rs);
SweepResult check_recursion_sampled(const RootSystem& rs, std::size_t samples, std::uint64_t seed);
/// z^P_d equals the longest coset representative for every d >= 2·θ∨.
SweepResult check_saturation(const RootSystem& rs);
/// Associativity, word independence, idempotence on simple reflections and
/// Bruhat growth. Exhaustive; callers keep |W| small.
SweepResult check_hecke_exhaustive(const RootSystem& rs, bool associativity);
SweepResult check_hecke_sampled(const RootSystem& rs, std::size_t samples, std::uint64_t seed);
/// emit_table agrees with delta_set / is_cosmall computed directly.
SweepResult check_table_consistency(const DynkinType& dynkin);
/// B2 and C2 tables coincide after swapping the two simple roots.
SweepResult check_b2_c2_duality();

std::vector<std::string> suite_names();
/// Runs one named suite (see suite_names) over every type up to
/// options.max_rank. Throws InputError for unknown names.
SweepResult run_suite(std::string_view name, const SweepOptions& options);

}  // namespace curvenbhd
