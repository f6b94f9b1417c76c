#include "bridge.hpp"
#include "expect_error.hpp"

#include "meshperm/enumerate.hpp"
#include "meshperm/series.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace meshperm;

namespace {

std::vector<BigInt> big(std::initializer_list<int> values)
{
    return {values.begin(), values.end()};
}

std::vector<BigInt> oracle_distribution(const Smp& p, int n)
{
    const int d = p.dimension();
    const auto cols = oracle::to_columns(p);
    std::vector<BigInt> counts(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& rows : oracle::multiperms(d, n))
        ++counts[static_cast<std::size_t>(oracle::count_smp(rows, cols))];
    return counts;
}

} // namespace

TEST(Distribution, SmpExamples)
{
    EXPECT_EQ(distribution(parse_smp("++"), 3).counts, big({0, 2, 3, 1}));
    for (int n = 2; n <= 5; ++n)
        EXPECT_EQ(distribution(Smp::full(2), n).count(0), factorial(static_cast<unsigned>(n)));
    EXPECT_EQ(distribution(parse_smp("+-,-+"), 3).count(0), 3);
    const auto t = distribution(parse_smp("+-"), 0);
    EXPECT_EQ(t.counts, big({1}));
}

TEST(Distribution, TotalsAndOracle)
{
    std::mt19937_64 rng(41);
    for (int d = 2; d <= 4; ++d)
        for (int n = 0; n <= (d == 4 ? 3 : 4); ++n)
            for (int trial = 0; trial < 6; ++trial) {
                const auto p = oracle::to_smp(d, oracle::random_columns(rng, d, 0.4));
                const auto t = distribution(p, n);
                EXPECT_EQ(t.total(), multiperm_count(d, n));
                EXPECT_EQ(t.counts, oracle_distribution(p, n)) << format_smp(p) << " n=" << n;
                EXPECT_EQ(count_avoiders(p, n), t.count(0));
            }
}

TEST(Distribution, MeshAndMarked)
{
    EXPECT_EQ(distribution(increasing_pair_pattern(3), 3).counts, big({17, 12, 6, 1}));
    EXPECT_EQ(distribution(increasing_pair_pattern(4), 3).counts, big({151, 50, 14, 1}));
    const MarkedSmp m(2, {{SignVector::parse("++"), Mark::at_least(1)}});
    EXPECT_EQ(distribution(m, 3).count(0), 1);
    EXPECT_EQ(distribution(increasing_pair_pattern(2), 1).counts, big({1}));
}

TEST(Distribution, WorkerCountDoesNotChangeResults)
{
    const auto p = parse_smp("+-+,-+-,++-");
    const auto one = distribution(p, 4, {1'000'000'000, 1});
    for (int w : {2, 3, 8})
        EXPECT_EQ(distribution(p, 4, {1'000'000'000, w}), one);
    const auto mesh = increasing_pair_pattern(3);
    EXPECT_EQ(distribution(mesh, 4, {1'000'000'000, 8}), distribution(mesh, 4, {1'000'000'000, 1}));
    EXPECT_EQ(count_max_occurrence(3, 4, {1'000'000'000, 8}).n_occurrences, count_max_occurrence(3, 4).n_occurrences);
}

TEST(Distribution, BudgetGuard)
{
    EXPECT_MESHPERM_ERROR(distribution(parse_smp("++"), 8, {1000, 1}), ErrorCode::BudgetExceeded);
    EXPECT_MESHPERM_ERROR(count_avoiders(parse_smp("+++"), 6, {1000, 1}), ErrorCode::BudgetExceeded);
    EXPECT_MESHPERM_ERROR(distribution(increasing_pair_pattern(3), 5, {1000, 1}), ErrorCode::BudgetExceeded);
    EXPECT_MESHPERM_ERROR(distribution(parse_smp("++"), 3, {1000, 0}), ErrorCode::InvalidArgument);
    EXPECT_MESHPERM_ERROR(distribution(parse_smp("++"), 30), ErrorCode::BudgetExceeded);
}

TEST(CountAvoiders, Examples)
{
    const auto pa = plus_antipodal_pattern(2);
    EXPECT_EQ(count_avoiders(pa, 1), 0);
    EXPECT_EQ(count_avoiders(pa, 2), 1);
    EXPECT_EQ(count_avoiders(pa, 3), 3);
    for (int n = 1; n <= 5; ++n)
        EXPECT_EQ(count_avoiders(parse_smp("--,+-"), n), 0);
    EXPECT_EQ(count_avoiders(parse_smp("--,++"), 2), 1);
}

TEST(ProjectiveLift, Examples)
{
    const auto r = projective_lift_check(parse_smp("+++,++-"), 3, 3);
    EXPECT_TRUE(r.equal);
    EXPECT_EQ(r.projected.counts, big({0, 2, 3, 1}));
    EXPECT_EQ(projective_lift_check(Smp::full(3), 1, 2).lifted.count(0), 4);
    EXPECT_TRUE(projective_lift_check(parse_smp("+-*,-+*"), 3, 3).equal);
    EXPECT_MESHPERM_ERROR(projective_lift_check(parse_smp("+++"), 3, 2), ErrorCode::NotProjective);
}

TEST(HyperplaneReduction, Examples)
{
    const auto p = pattern_union(hyperplane_core(3, 1), parse_smp("-++"));
    for (int n = 1; n <= 4; ++n) {
        const auto r = hyperplane_reduction_count(p, 1, n);
        EXPECT_EQ(r.via_formula, r.direct) << "n=" << n;
    }
    EXPECT_EQ(hyperplane_reduction_count(p, 1, 1).direct, 1);
    EXPECT_MESHPERM_ERROR(hyperplane_reduction_count(hyperplane_core(3, 1), 1, 3), ErrorCode::InvalidArgument);
    EXPECT_MESHPERM_ERROR(hyperplane_reduction_count(parse_smp("-++"), 1, 3), ErrorCode::NotHyperplane);
}

TEST(MaxOccurrence, Examples)
{
    for (int n = 0; n <= 7; ++n)
        EXPECT_EQ(count_max_occurrence(2, n).n_occurrences, 1) << n;
    const auto r2 = count_max_occurrence(3, 2);
    EXPECT_EQ(r2.n_occurrences, 3);
    EXPECT_EQ(r2.parallel_avoidance, 3);
    const auto r3 = count_max_occurrence(3, 3);
    EXPECT_EQ(r3.n_occurrences, r3.parallel_avoidance);
    // Oracle: pairs of permutations with no pair ascending in both rows.
    int expected = 0;
    for (const auto& rows : oracle::multiperms(3, 3))
        expected += oracle::count_increasing_pairs({rows[1], rows[2]}) == 0 ? 1 : 0;
    EXPECT_EQ(r3.n_occurrences, expected);
}
