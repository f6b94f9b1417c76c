#include "meshperm/enumerate.hpp"
#include "meshperm/occurrence.hpp"
#include "meshperm/rank.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace meshperm;

static void BM_DistributionSmp(benchmark::State& state)
{
    const auto p = parse_smp("+-+,-+-,++-");
    const auto n = static_cast<int>(state.range(0));
    const EnumerationConfig config{1'000'000'000, static_cast<int>(state.range(1))};
    for (auto _ : state)
        benchmark::DoNotOptimize(distribution(p, n, config));
}
BENCHMARK(BM_DistributionSmp)->Args({4, 1})->Args({5, 1})->Args({5, 8})->Unit(benchmark::kMillisecond);

static void BM_DistributionMesh(benchmark::State& state)
{
    const auto p = increasing_pair_pattern(3);
    const auto n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(distribution(p, n));
}
BENCHMARK(BM_DistributionMesh)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_RankSolver(benchmark::State& state)
{
    const auto d = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    std::vector<Smp> patterns;
    std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << d) - 1);
    for (int i = 0; i < 64; ++i) {
        std::vector<SignVector> cols;
        for (int k = 0; k < 3 * d; ++k)
            cols.emplace_back(d, bits(rng));
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        patterns.emplace_back(d, cols);
    }
    for (auto _ : state)
        for (const auto& p : patterns)
            benchmark::DoNotOptimize(rank(p));
}
BENCHMARK(BM_RankSolver)->Arg(8)->Arg(16)->Arg(24);

static void BM_MeshOccurrence(benchmark::State& state)
{
    const auto d = static_cast<int>(state.range(0));
    const auto n = static_cast<int>(state.range(1));
    std::mt19937_64 rng(2);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(d - 1), std::vector<int>(static_cast<std::size_t>(n)));
    for (auto& row : rows) {
        std::iota(row.begin(), row.end(), 1);
        std::shuffle(row.begin(), row.end(), rng);
    }
    const auto perm = MultiPerm::from_rows(rows);
    const auto p = increasing_pair_pattern(d);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_occurrences(perm, p));
}
BENCHMARK(BM_MeshOccurrence)->Args({3, 12})->Args({4, 12});

BENCHMARK_MAIN();
