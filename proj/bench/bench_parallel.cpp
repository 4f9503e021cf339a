// Serial reference vs OpenMP kernels: structure-constant table and Jacobi sweep.

#include <benchmark/benchmark.h>

#include "e6/algebra.hpp"

using namespace e6;

namespace {

const StructureTable& table() {
  static const StructureTable t = structure_constants(preferred_basis(), 1);
  return t;
}

void BM_StructureConstantsSerial(benchmark::State& state) {
  all_tangents();
  for (auto _ : state) benchmark::DoNotOptimize(structure_constants_serial(preferred_basis()));
}

void BM_StructureConstantsParallel(benchmark::State& state) {
  all_tangents();
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(structure_constants(preferred_basis(), jobs));
}

void BM_JacobiSerial(benchmark::State& state) {
  const auto& t = table();
  for (auto _ : state) benchmark::DoNotOptimize(check_jacobi_serial(t));
}

void BM_JacobiParallel(benchmark::State& state) {
  const auto& t = table();
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_jacobi(t, jobs));
}

}  // namespace

BENCHMARK(BM_StructureConstantsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StructureConstantsParallel)->Arg(2)->Arg(4)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobiSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JacobiParallel)->Arg(2)->Arg(4)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
