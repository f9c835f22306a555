#include <benchmark/benchmark.h>

#include "jacobsthal/eval.hpp"
#include "jacobsthal/search.hpp"

using namespace jacobsthal;

namespace {

// Table values, used to pick the hardest feasible and easiest infeasible length.
constexpr std::uint32_t kPairedH[] = {2, 6, 18, 30, 66, 150, 192, 258, 366, 450};

void BM_FeasibleAtOptimum(benchmark::State& state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    const PrimeContext ctx(n);
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        SearchStats stats;
        benchmark::DoNotOptimize(feasible(kPairedH[n - 1] - 1, ctx, ProblemKind::Paired, {}, &stats));
        nodes += stats.nodes;
    }
    state.counters["nodes"] = benchmark::Counter(static_cast<double>(nodes), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_FeasibleAtOptimum)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);

void BM_InfeasibleAtOptimum(benchmark::State& state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    const PrimeContext ctx(n);
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        SearchStats stats;
        benchmark::DoNotOptimize(feasible(kPairedH[n - 1], ctx, ProblemKind::Paired, {}, &stats));
        nodes += stats.nodes;
    }
    state.counters["nodes"] = benchmark::Counter(static_cast<double>(nodes), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_InfeasibleAtOptimum)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);

void BM_LeadingPrimes(benchmark::State& state)
{
    const PrimeContext ctx(8);
    SearchOptions options;
    options.leading_primes = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(feasible(kPairedH[7], ctx, ProblemKind::Paired, options));
}
BENCHMARK(BM_LeadingPrimes)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_ComputeH(benchmark::State& state)
{
    const PrimeContext ctx(static_cast<unsigned>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_h(ctx, ProblemKind::Paired).h);
}
BENCHMARK(BM_ComputeH)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_Cover(benchmark::State& state)
{
    const PrimeContext ctx(12);
    const auto assignment = feasible(600, ctx, ProblemKind::Paired);
    for (auto _ : state)
        benchmark::DoNotOptimize(is_full_cover(*assignment, ctx));
}
BENCHMARK(BM_Cover);

void BM_VerifyWitness(benchmark::State& state)
{
    const PrimeContext ctx(9);
    const auto witness = compute_h(ctx, ProblemKind::Paired).witness;
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_witness(witness, ctx));
}
BENCHMARK(BM_VerifyWitness);

} // namespace

BENCHMARK_MAIN();
