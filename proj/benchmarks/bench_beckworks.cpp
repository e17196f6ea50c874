#include <benchmark/benchmark.h>

#include "beckworks/beck_one.hpp"
#include "beckworks/beck_two.hpp"
#include "beckworks/families.hpp"
#include "beckworks/gapfree.hpp"
#include "beckworks/verify.hpp"

namespace {

using namespace beckworks;

void BM_CountAll(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count(n, FamilySpec::all()));
}
BENCHMARK(BM_CountAll)->Arg(30)->Arg(45)->Arg(60);

// Pruned generator against the unpruned filter on a sparse family.
void BM_CountGapFreePruned(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count(n, FamilySpec::gap_free()));
}
BENCHMARK(BM_CountGapFreePruned)->Arg(40)->Arg(60);

void BM_CountGapFreeFiltered(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_filtered(n, FamilySpec::gap_free()));
}
BENCHMARK(BM_CountGapFreeFiltered)->Arg(40)->Arg(60);

void BM_KDistinctLengthSum(benchmark::State& state) {
    const auto k = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(aggregate(50, FamilySpec::k_distinct(k), Statistic::length()));
}
BENCHMARK(BM_KDistinctLengthSum)->DenseRange(2, 5);

void BM_BeckOneDecompose(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(beck_one::decompose(n, 2).member_count());
}
BENCHMARK(BM_BeckOneDecompose)->Arg(20)->Arg(30)->Arg(40);

void BM_BeckTwoDecompose(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(beck_two::decompose(n, 2).member_count());
}
BENCHMARK(BM_BeckTwoDecompose)->Arg(20)->Arg(30)->Arg(40);

void BM_GapFreeCover(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gapfree::cover(n, gapfree::Parity::Odd).member_count());
}
BENCHMARK(BM_GapFreeCover)->Arg(40)->Arg(80);

void BM_VerifySuite(benchmark::State& state) {
    const auto ids = verify::full_catalog(2, 3, 0, 1);
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify::run_suite(ids, 25, threads).passed);
}
BENCHMARK(BM_VerifySuite)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
