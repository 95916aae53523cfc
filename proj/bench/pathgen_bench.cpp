#include <robinson/generate.hpp>
#include <robinson/pathgen.hpp>
#include <robinson/pipeline.hpp>

#include <benchmark/benchmark.h>

namespace {

robinson::RobinsonMatrix instance(int n)
{
    robinson::Rng rng(static_cast<std::uint64_t>(n));
    return robinson::random_robinson(n, 2, rng);
}

void BM_TablesSerial(benchmark::State & state)
{
    auto m = instance(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(robinson::generate_bound_tables_serial(m));
    state.SetComplexityN(state.range(0));
}

void BM_TablesParallel(benchmark::State & state)
{
    auto m = instance(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(robinson::generate_bound_tables(m));
    state.SetComplexityN(state.range(0));
}

void BM_SolveQuantized(benchmark::State & state)
{
    robinson::Rng rng(7);
    auto m = robinson::quantized_instance(static_cast<int>(state.range(0)), 2, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(robinson::solve(m));
    state.SetComplexityN(state.range(0));
}

} // namespace

BENCHMARK(BM_TablesSerial)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_TablesParallel)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_SolveQuantized)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond)->Complexity();

BENCHMARK_MAIN();
