#include <benchmark/benchmark.h>

#include <catcom/corpus.hpp>
#include <catcom/decide.hpp>
#include <catcom/model.hpp>
#include <catcom/tensor.hpp>
#include <catcom/term.hpp>

using namespace catcom;

namespace {

Equation equation(const Presentation& p, const char* lhs, const char* rhs) {
  return Equation::make(parse_term(lhs, p.signature()), parse_term(rhs, p.signature()));
}

}  // namespace

static void BM_ProveSemilatticeCommutation(benchmark::State& state) {
  const auto p = builtin_theory("sl");
  const auto eq = equation(p, "join(join(x1,x2),x3)", "join(x3,join(x2,x1))");
  for (auto _ : state) benchmark::DoNotOptimize(is_proved(decide_equal(p, eq)));
}
BENCHMARK(BM_ProveSemilatticeCommutation)->Unit(benchmark::kMillisecond);

static void BM_RefuteMonoidCommutation(benchmark::State& state) {
  const auto p = builtin_theory("monoid");
  const auto eq = equation(p, "mul(x1,x2)", "mul(x2,x1)");
  for (auto _ : state) benchmark::DoNotOptimize(is_refuted(decide_equal(p, eq)));
}
BENCHMARK(BM_RefuteMonoidCommutation)->Unit(benchmark::kMillisecond);

static void BM_EnumerateModels(benchmark::State& state, const char* theory) {
  const auto p = builtin_theory(theory);
  const auto k = static_cast<std::size_t>(state.range(0));
  std::size_t count = 0;
  for (auto _ : state) {
    count = enumerate_models(p, k).size();
    benchmark::DoNotOptimize(count);
  }
  state.counters["models"] = static_cast<double>(count);
}
BENCHMARK_CAPTURE(BM_EnumerateModels, monoid, "monoid")->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EnumerateModels, grp, "grp")->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_TensorCorrespondence(benchmark::State& state) {
  const auto m = builtin_theory("monoid");
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_tensor_correspondence(m, m, k).tensor_models);
}
BENCHMARK(BM_TensorCorrespondence)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_SoundnessStress(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(soundness_stress(1, count).contradictions);
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * count));
}
BENCHMARK(BM_SoundnessStress)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
