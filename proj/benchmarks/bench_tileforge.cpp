#include <benchmark/benchmark.h>

#include "tileforge/birkhoff.hpp"
#include "tileforge/generation.hpp"
#include "tileforge/oracle.hpp"
#include "tileforge/thurston.hpp"

namespace {

using namespace tileforge;

// Full sweep through all tilings with one reusable session.
void BM_EnumerateRect(benchmark::State& state) {
  const Numbering n = Numbering::canonical(make_rect(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  std::uint64_t tilings = 0;
  for (auto _ : state) {
    GenerationSession s(n);
    std::uint64_t count = 1;
    while (s.advance()) ++count;
    benchmark::DoNotOptimize(count);
    tilings += count;
  }
  state.counters["tilings/s"] = benchmark::Counter(static_cast<double>(tilings), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_EnumerateRect)->Args({4, 4})->Args({6, 6})->Args({4, 10})->Unit(benchmark::kMillisecond);

void BM_EnumerateHexagon(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  const Numbering n = Numbering::canonical(make_hexagon(a, a, a));
  std::uint64_t tilings = 0;
  for (auto _ : state) {
    GenerationSession s(n);
    std::uint64_t count = 1;
    while (s.advance()) ++count;
    benchmark::DoNotOptimize(count);
    tilings += count;
  }
  state.counters["tilings/s"] = benchmark::Counter(static_cast<double>(tilings), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_EnumerateHexagon)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

// One successor step, restarting at the minimum when the top is reached.
void BM_SuccessorStep(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  GenerationSession s(Numbering::canonical(make_rect(m, m)));
  for (auto _ : state) {
    if (!s.advance()) s.reset_to_minimal();
    benchmark::DoNotOptimize(s.word());
  }
  state.SetComplexityN(m * m);
}
BENCHMARK(BM_SuccessorStep)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_MinimalTiling(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Domain d = make_rect(m, m);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_tiling(d));
  state.SetComplexityN(m * m);
}
BENCHMARK(BM_MinimalTiling)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_MaximalHexagon(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  const Domain d = make_hexagon(a, a, a);
  for (auto _ : state) benchmark::DoNotOptimize(maximal_tiling(d));
  state.SetComplexityN(static_cast<std::int64_t>(d.cells().size()));
}
BENCHMARK(BM_MaximalHexagon)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_IrreduciblePoset(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Domain d = make_rect(m, m);
  for (auto _ : state) benchmark::DoNotOptimize(irreducible_poset(d));
}
BENCHMARK(BM_IrreduciblePoset)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_TransferMatrixCount(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::count_rect(m, m));
}
BENCHMARK(BM_TransferMatrixCount)->Arg(6)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
