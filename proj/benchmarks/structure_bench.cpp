#include <benchmark/benchmark.h>

#include <memory>

#include <catcom/category.hpp>
#include <catcom/clone.hpp>
#include <catcom/funny.hpp>
#include <catcom/monoid.hpp>
#include <catcom/operad.hpp>
#include <catcom/operad_presentation.hpp>
#include <catcom/premonoidal.hpp>
#include <catcom/sesqui.hpp>

using namespace catcom;

static void BM_MonoidIsoClasses(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(monoid_iso_classes(k).size());
}
BENCHMARK(BM_MonoidIsoClasses)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_MonoidUniversalCheck(benchmark::State& state) {
  const auto z2 = cyclic_group(2);
  for (auto _ : state) benchmark::DoNotOptimize(monoid_tensor_universal_check(z2, z2, 4).factorizations);
}
BENCHMARK(BM_MonoidUniversalCheck)->Unit(benchmark::kMillisecond);

static void BM_OperadTheory(benchmark::State& state) {
  const auto ass = std::make_shared<const AssOperad>(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theory_of_operad(ass, n)->size(n));
}
BENCHMARK(BM_OperadTheory)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_OperadValidate(benchmark::State& state) {
  const AssOperad ass(4);
  for (auto _ : state) benchmark::DoNotOptimize(validate_operad(ass).ok());
}
BENCHMARK(BM_OperadValidate)->Unit(benchmark::kMillisecond);

static void BM_BvAlgebras(benchmark::State& state) {
  const auto bv = bv_tensor_presentation(ass_unital_presentation(), ass_unital_presentation());
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_operad_algebras(bv, k).size());
}
BENCHMARK(BM_BvAlgebras)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void BM_FunnyConfluence(benchmark::State& state) {
  const FunnyTensor t(walking_arrow(), walking_arrow());
  const auto len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(t.check_local_confluence(len).peaks);
}
BENCHMARK(BM_FunnyConfluence)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_SesquiInterchange(benchmark::State& state) {
  const auto s = monoid_two_cells(symmetric_group_3());
  for (auto _ : state) benchmark::DoNotOptimize(sesqui_interchange_all(s).size());
}
BENCHMARK(BM_SesquiInterchange);

static void BM_PremonoidalCentre(benchmark::State& state) {
  const auto p = codiscrete_monoid_premonoidal(symmetric_group_3());
  for (auto _ : state) benchmark::DoNotOptimize(central_arrows(p).size());
}
BENCHMARK(BM_PremonoidalCentre);

BENCHMARK_MAIN();
