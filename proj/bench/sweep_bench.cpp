// Serial reference against the OpenMP kernels on S_5.

#include <benchmark/benchmark.h>

#include "csmkit/sweeps.hpp"

namespace {

using namespace csmkit;

const WeylGroup& s5() {
  static const WeylGroup group(cartan_from_label("A4"));
  return group;
}

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_CsmTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(csm_table(s5(), exec_of(state)));
}

void BM_EquivariantTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(equivariant_table(s5(), exec_of(state)));
}

void BM_CoproductTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(coproduct_table(s5(), exec_of(state)));
}

void BM_WordCoproductTable(benchmark::State& state) {
  static const WeylGroup s4(cartan_from_label("A3"));
  for (auto _ : state) benchmark::DoNotOptimize(word_coproduct_table(s4, exec_of(state)));
}

void BM_FkTable(benchmark::State& state) {
  static const FKContext ctx(s5());
  for (auto _ : state) benchmark::DoNotOptimize(fk_table(ctx, FKMode::extended, exec_of(state)));
}

// Arg 0: serial reference, arg 1: OpenMP.
BENCHMARK(BM_CsmTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EquivariantTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoproductTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WordCoproductTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FkTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
