#include "bridge.hpp"
#include "expect_error.hpp"

#include "meshperm/construct.hpp"
#include "meshperm/enumerate.hpp"
#include "meshperm/rank.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace meshperm;

TEST(Rank, Examples)
{
    EXPECT_FALSE(avoidable(parse_smp("--,+-")));
    EXPECT_TRUE(avoidable(parse_smp("--,++")));
    EXPECT_FALSE(avoidable(Smp::empty(3)));
    EXPECT_FALSE(avoidable(parse_smp("+-+")));
    EXPECT_EQ(rank(parse_smp("++-++,-+--+,++++-")), std::nullopt);
    EXPECT_EQ(rank(parse_smp("+-,-+")), 2);
    EXPECT_EQ(rank(Smp::empty(2)), std::nullopt);
    EXPECT_EQ(rank(parse_smp("+++")), std::nullopt);
    EXPECT_EQ(rank(parse_smp("+++,+--,-+-,--+")), 3);
}

TEST(Rank, SolutionIsACover)
{
    const auto p = parse_smp("+++,+--,-+-,--+,++-");
    const auto sol = solve_rank(p);
    ASSERT_TRUE(sol.rank);
    ASSERT_EQ(sol.columns.size(), static_cast<std::size_t>(*sol.rank));
    const Smp sub(3, sol.columns);
    EXPECT_TRUE(sub.is_subset_of(p));
    EXPECT_TRUE(avoidable(sub));
}

TEST(Rank, Classify)
{
    EXPECT_EQ(classify(parse_smp("+-,-+")), AvoidabilityClass::avoidable_with_rank(2));
    EXPECT_TRUE(classify(parse_smp("--,+-")).strongly_unavoidable());
    for (int d = 2; d <= 5; ++d) {
        for (int i = 1; i <= d; ++i)
            EXPECT_TRUE(classify(hyperplane_core(d, i)).strongly_unavoidable());
        EXPECT_EQ(classify(Smp::full(d)), AvoidabilityClass::avoidable_with_rank(2));
    }
}

TEST(Rank, MatchesExhaustiveSubsetSearch)
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> dim(2, 6);
    for (int trial = 0; trial < 300; ++trial) {
        const int d = dim(rng);
        auto cols = oracle::random_columns(rng, d, 0.5);
        std::shuffle(cols.begin(), cols.end(), rng);
        if (cols.size() > 12)
            cols.resize(12);
        const auto p = oracle::to_smp(d, cols);
        const int expected = oracle::rank_by_subsets(cols);
        const auto got = rank(p);
        if (expected < 0)
            EXPECT_FALSE(got) << format_smp(p);
        else
            EXPECT_EQ(got, expected) << format_smp(p);
        if (got) {
            EXPECT_GE(*got, 2);
            EXPECT_LE(*got, d);
        }
    }
}

TEST(Rank, MonotoneUnderInclusionAndSymmetric)
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 3 + trial % 3;
        const auto big = oracle::to_smp(d, oracle::random_columns(rng, d, 0.6));
        std::vector<SignVector> kept;
        std::bernoulli_distribution keep(0.7);
        for (const auto& c : big.columns())
            if (keep(rng))
                kept.push_back(c);
        const Smp small(d, kept);
        if (avoidable(small))
            EXPECT_TRUE(avoidable(big));
        if (rank(small) && rank(big))
            EXPECT_GE(*rank(small), *rank(big));
        EXPECT_EQ(rank(big), rank(complement_row(big, 1 + trial % d)));
    }
}

TEST(Rank, LargeInstancesAndCapacity)
{
    // d = 20 with a planted cover of size 3 hidden among random columns.
    std::mt19937_64 rng(29);
    const int d = 20;
    std::vector<SignVector> cols{SignVector(d, 0), SignVector(d, 0x3FF), SignVector(d, 0xFFC00)};
    std::uniform_int_distribution<std::uint64_t> any(0, low_bits(d));
    for (int i = 0; i < 300; ++i) {
        const SignVector c(d, any(rng));
        if (std::find(cols.begin(), cols.end(), c) == cols.end())
            cols.push_back(c);
    }
    const Smp p(d, cols);
    const auto r = rank(p);
    ASSERT_TRUE(r);
    EXPECT_LE(*r, 3);
    EXPECT_MESHPERM_ERROR(rank(parse_smp(std::string(25, '+') + "," + std::string(25, '-'))),
                          ErrorCode::CapacityExceeded);
}

// Strongly unavoidable patterns occur everywhere; an avoidable pattern of
// rank r occurs in every permutation shorter than r.
TEST(Rank, DichotomyOnSmallDimensions)
{
    for (int d = 2; d <= 3; ++d) {
        const int top = d == 2 ? 6 : 4;
        const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << d);
        for (std::uint64_t mask = 0; mask < count; ++mask) {
            const auto p = Smp::from_member_mask(d, mask);
            const auto c = classify(p);
            for (int n = 1; n <= top; ++n) {
                const bool forced = c.strongly_unavoidable() || n < *c.rank;
                if (forced)
                    EXPECT_EQ(count_avoiders(p, n), 0) << format_smp(p) << " n=" << n;
                else
                    EXPECT_GT(count_avoiders(p, n), 0) << format_smp(p) << " n=" << n;
            }
        }
    }
}
