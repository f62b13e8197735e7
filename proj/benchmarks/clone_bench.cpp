#include <benchmark/benchmark.h>

#include <catcom/clone.hpp>
#include <catcom/corpus.hpp>
#include <catcom/duoidal.hpp>

using namespace catcom;

// Closure of the clone of one algebra; arg 0 is the truncation bound.
static void BM_CloneClosure(benchmark::State& state, const char* name) {
  const auto alg = builtin_algebra(name);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::size_t elements = 0;
  for (auto _ : state) {
    const auto c = clone_of_algebra(alg, n);
    elements = c->size(n);
    benchmark::DoNotOptimize(elements);
  }
  state.counters["elements"] = static_cast<double>(elements);
}
BENCHMARK_CAPTURE(BM_CloneClosure, latt, "latt")->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CloneClosure, nand, "b14")->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CloneClosure, z2, "z2")->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

// All admissible pairs n * m <= N of a clone, by one of the two routes.
static void BM_PairScan(benchmark::State& state, const char* name, bool duoidal) {
  const auto c = clone_of_algebra(builtin_algebra(name), 4);
  std::size_t pairs = 0;
  for (auto _ : state) {
    std::size_t commuting = 0;
    pairs = 0;
    for (std::size_t n = 0; n <= 4; ++n)
      for (std::size_t m = 0; n * m <= 4 && m <= 4; ++m)
        for (ElementId f = 0; f < c->size(n); ++f)
          for (ElementId g = 0; g < c->size(m); ++g) {
            ++pairs;
            commuting += duoidal ? op_commutes_duoidal(*c, {n, f}, {m, g}) : op_commutes(*c, {n, f}, {m, g});
          }
    benchmark::DoNotOptimize(commuting);
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * pairs));
}
BENCHMARK_CAPTURE(BM_PairScan, latt_projection, "latt", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PairScan, latt_duoidal, "latt", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PairScan, b2_projection, "b2", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PairScan, b2_duoidal, "b2", true)->Unit(benchmark::kMillisecond);

static void BM_CommutativeClone(benchmark::State& state) {
  const auto c = clone_of_algebra(builtin_algebra("sl"), 4);
  for (auto _ : state) benchmark::DoNotOptimize(is_commutative_clone(*c).commutative);
}
BENCHMARK(BM_CommutativeClone);

static void BM_CentralizerClone(benchmark::State& state) {
  const auto alg = builtin_algebra("latt");
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(centralizer_clone(alg, n)->size(n));
}
BENCHMARK(BM_CentralizerClone)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
