// Parallel kernels against their single-loop references. The pairs must
// produce identical results (tests pin that); this target measures the win.
#include <benchmark/benchmark.h>

#include "oneway/opt.hpp"
#include "oneway/rac.hpp"
#include "oneway/simulation.hpp"

namespace {

using namespace oneway;

constexpr std::uint64_t kSeed = 42;

void bm_sampled_tally(benchmark::State& state) {
  const PrimeDim d(3);
  const TaskSpaces s = maximal_task(d);
  const Partitions p = maximal_partitions(d);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(classical_simulation_sampled(s, p, n, kSeed));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(bm_sampled_tally)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void bm_sampled_tally_serial(benchmark::State& state) {
  const PrimeDim d(3);
  const TaskSpaces s = maximal_task(d);
  const Partitions p = maximal_partitions(d);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(classical_simulation_sampled_serial(s, p, n, kSeed));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(bm_sampled_tally_serial)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

// range(0) = bits per code string; the candidate space is 2^(2^n) * 2^(2n).
void bm_classical_optimum(benchmark::State& state) {
  const RacTask task(static_cast<int>(state.range(0)));
  const PayoffTable pay = rac_payoff(task);
  for (auto _ : state)
    benchmark::DoNotOptimize(classical_optimum(task.spaces(), pay));
}
BENCHMARK(bm_classical_optimum)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_classical_optimum_serial(benchmark::State& state) {
  const RacTask task(static_cast<int>(state.range(0)));
  const PayoffTable pay = rac_payoff(task);
  for (auto _ : state)
    benchmark::DoNotOptimize(classical_optimum_serial(task.spaces(), pay));
}
BENCHMARK(bm_classical_optimum_serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

// range(0) = inverse grid step for the three-bit plane scan.
void bm_region_scan(benchmark::State& state) {
  const double step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(advantage_region(RegionTask::rac3, step));
}
BENCHMARK(bm_region_scan)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

void bm_region_scan_serial(benchmark::State& state) {
  const double step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(advantage_region_serial(RegionTask::rac3, step));
}
BENCHMARK(bm_region_scan_serial)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
