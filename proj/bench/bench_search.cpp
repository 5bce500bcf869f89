// Serial reference scan against the OpenMP scan. Both searches run a box with
// no witness so every candidate is visited.

#include "irrcert/poly_text.hpp"
#include "irrcert/search.hpp"

#include <benchmark/benchmark.h>

using namespace irrcert;

namespace {

// (x^2 + 1)(x^3 + x + 7) is reducible: no variant can ever certify it.
const Polynomial kReducible = parse_polynomial("x^5 + 2*x^3 + 7*x^2 + x + 7");

void BM_FindWitnessSerial(benchmark::State& state)
{
    const SearchBounds b{static_cast<std::uint64_t>(state.range(0)), 200, Variant::Theorem1};
    for (auto _ : state)
        benchmark::DoNotOptimize(find_witness_serial(kReducible, b));
}

void BM_FindWitnessParallel(benchmark::State& state)
{
    const SearchBounds b{static_cast<std::uint64_t>(state.range(0)), 200, Variant::Theorem1};
    for (auto _ : state)
        benchmark::DoNotOptimize(find_witness(kReducible, b));
}

void BM_CompareZ(benchmark::State& state)
{
    const Polynomial z = parse_polynomial("72*x^18 - x + 9");
    for (auto _ : state)
        benchmark::DoNotOptimize(compare_criteria(z, 30, 15));
}

}  // namespace

BENCHMARK(BM_FindWitnessSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FindWitnessParallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompareZ)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
