#include <benchmark/benchmark.h>

#include "rholat/cotan_float.hpp"
#include "rholat/lattice_exact.hpp"
#include "rholat/sweep.hpp"

using namespace rholat;

namespace {

void BM_SweepLens(benchmark::State& state, Execution exec)
{
    const auto pr = IntRange::parse("3:" + std::to_string(state.range(0)));
    const auto qr = IntRange::parse("1:" + std::to_string(state.range(0)));
    SweepOptions opt{exec, exec == Execution::serial ? 1 : default_jobs(), kDefaultTolerance, nullptr};
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep_lens(pr, qr, opt));
    state.counters["jobs"] = opt.jobs;
}

void BM_SweepFloer(benchmark::State& state, Execution exec)
{
    const auto pr = IntRange::parse("3:" + std::to_string(state.range(0)));
    SweepOptions opt{exec, exec == Execution::serial ? 1 : default_jobs(), kDefaultTolerance, nullptr};
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep_floer(pr, pr, opt));
    state.counters["jobs"] = opt.jobs;
}

void BM_CountFast(benchmark::State& state)
{
    const std::int64_t p = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_parallelogram(p, p - 2, p - 1));
}

void BM_CountScan(benchmark::State& state)
{
    const std::int64_t p = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_parallelogram_scan(p, p - 2, p - 1));
}

void BM_DeltaTauExact(benchmark::State& state)
{
    const std::int64_t p = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(delta_tau_exact(p, 5, 4));
}

void BM_DeltaTauFloat(benchmark::State& state)
{
    const std::int64_t p = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(delta_tau_float(p, 5, 4));
}

} // namespace

BENCHMARK_CAPTURE(BM_SweepLens, serial, Execution::serial)->Arg(31)->Arg(61)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SweepLens, parallel, Execution::parallel)->Arg(31)->Arg(61)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SweepFloer, serial, Execution::serial)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SweepFloer, parallel, Execution::parallel)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountFast)->Arg(101)->Arg(1001)->Arg(10001);
BENCHMARK(BM_CountScan)->Arg(101)->Arg(1001)->Arg(10001);
BENCHMARK(BM_DeltaTauExact)->Arg(101)->Arg(1001)->Arg(10001);
BENCHMARK(BM_DeltaTauFloat)->Arg(101)->Arg(1001)->Arg(10001);

BENCHMARK_MAIN();
