#include <benchmark/benchmark.h>

#include <random>

#include "curvenbhd/curves.hpp"
#include "curvenbhd/verify.hpp"

using namespace curvenbhd;

namespace {

DynkinType type_of(const benchmark::State& state) {
  return DynkinType(static_cast<Family>(state.range(0)), static_cast<int>(state.range(1)));
}

void BM_BuildRootSystem(benchmark::State& state) {
  const DynkinType t = type_of(state);
  for (auto _ : state) {
    RootSystem rs(t);
    benchmark::DoNotOptimize(rs.roots().size());
  }
}
BENCHMARK(BM_BuildRootSystem)->Args({'A', 8})->Args({'B', 8})->Args({'D', 8})->Args({'F', 4});

void BM_HeckeProduct(benchmark::State& state) {
  const RootSystem rs(type_of(state));
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_int_distribution<int> letter(1, rs.rank());
  std::vector<std::pair<WeylElement, WeylElement>> pairs;
  for (int k = 0; k < 64; ++k) {
    Word a(20), b(20);
    for (int& x : a) x = letter(rng);
    for (int& x : b) x = letter(rng);
    pairs.emplace_back(from_word(rs, a), from_word(rs, b));
  }
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& [u, v] = pairs[k++ % pairs.size()];
    benchmark::DoNotOptimize(hecke_product(rs, u, v));
  }
}
BENCHMARK(BM_HeckeProduct)->Args({'B', 4})->Args({'D', 6})->Args({'F', 4});

void BM_ZOfHighestCoroot(benchmark::State& state) {
  const RootSystem rs(type_of(state));
  const ParabolicSubset p{1};
  const Degree d = project_root(rs, rs.highest_root(), p).scaled(2);
  for (auto _ : state) benchmark::DoNotOptimize(z_P_d(rs, d, p));
}
BENCHMARK(BM_ZOfHighestCoroot)->Args({'B', 4})->Args({'C', 5})->Args({'D', 5});

void BM_CriterionSweep(benchmark::State& state) {
  const RootSystem rs(type_of(state));
  for (auto _ : state) {
    const auto r = check_cosmall_criterion(rs);
    benchmark::DoNotOptimize(r.cases);
  }
}
BENCHMARK(BM_CriterionSweep)->Args({'B', 4})->Args({'C', 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
