#include <benchmark/benchmark.h>

#include "hwdirac/verify.hpp"

using namespace hwdirac;

namespace {

Execution mode(const benchmark::State& st) { return st.range(0) == 0 ? Execution::Serial : Execution::Parallel; }

void BM_ScanE7(benchmark::State& st) {
  const Weight l{0, 0, 0, 0, 0, -20, 5, -5};
  for (auto _ : st) benchmark::DoNotOptimize(scan(AlgebraKind::E7, l, 20, mode(st)));
}

void BM_CaseEquivalenceE6(benchmark::State& st) {
  const GridSpec g = default_case_grid(AlgebraKind::E6);
  for (auto _ : st) benchmark::DoNotOptimize(verify_case_equivalence(AlgebraKind::E6, g, mode(st)));
}

void BM_CoherenceE7(benchmark::State& st) {
  GridSpec g = default_coherence_grid(AlgebraKind::E7);
  g.coords[6] = {0, 8, Rational(1, 2)};
  for (auto _ : st) benchmark::DoNotOptimize(verify_classifier_coherence(AlgebraKind::E7, g, 12, mode(st)));
}

void BM_Genprv(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(verify_genprv(AlgebraKind::E7, 1000, 20, 7, mode(st)));
}

}  // namespace

// Arg 0 = serial reference, 1 = OpenMP
BENCHMARK(BM_ScanE7)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CaseEquivalenceE6)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoherenceE7)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Genprv)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
