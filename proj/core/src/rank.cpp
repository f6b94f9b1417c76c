#include "meshperm/rank.hpp"

#include "meshperm/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

namespace meshperm {

bool avoidable(const Smp& pattern)
{
    if (pattern.is_empty())
        return false;
    const std::uint64_t all = low_bits(pattern.dimension());
    std::uint64_t seen_minus = 0;
    std::uint64_t seen_plus = 0;
    for (const auto& c : pattern.columns()) {
        seen_minus |= c.minus_bits();
        seen_plus |= ~c.minus_bits() & all;
    }
    return seen_minus == all && seen_plus == all;
}

namespace {

class CoverSolver {
public:
    CoverSolver(const Smp& pattern)
        : d_(pattern.dimension())
        , universe_(low_bits(2 * d_))
    {
        const std::uint64_t row_mask = low_bits(d_);
        for (const auto& c : pattern.columns()) {
            const std::uint64_t minus = c.minus_bits();
            covers_.push_back((~minus & row_mask) | (minus << d_));
        }
        coverers_.resize(static_cast<std::size_t>(2 * d_));
        for (std::size_t col = 0; col < covers_.size(); ++col)
            for (int e = 0; e < 2 * d_; ++e)
                if ((covers_[col] >> e) & 1U)
                    coverers_[static_cast<std::size_t>(e)].push_back(col);
    }

    std::vector<std::size_t> solve()
    {
        best_ = greedy();
        std::vector<std::size_t> chosen;
        search(universe_, chosen);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    std::vector<std::size_t> greedy() const
    {
        std::vector<std::size_t> picked;
        std::uint64_t uncovered = universe_;
        while (uncovered != 0) {
            std::size_t best_col = 0;
            int best_gain = -1;
            for (std::size_t col = 0; col < covers_.size(); ++col) {
                const int gain = std::popcount(covers_[col] & uncovered);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_col = col;
                }
            }
            picked.push_back(best_col);
            uncovered &= ~covers_[best_col];
        }
        return picked;
    }

    void search(std::uint64_t uncovered, std::vector<std::size_t>& chosen)
    {
        const std::size_t depth = chosen.size();
        if (uncovered == 0) {
            if (depth < best_.size())
                best_ = chosen;
            return;
        }
        if (depth + 1 >= best_.size())
            return;

        auto [it, inserted] = memo_.try_emplace(uncovered, depth);
        if (!inserted) {
            if (it->second <= depth)
                return;
            it->second = depth;
        }

        int max_gain = 0;
        for (std::uint64_t cov : covers_)
            max_gain = std::max(max_gain, std::popcount(cov & uncovered));
        const std::size_t remaining = static_cast<std::size_t>(std::popcount(uncovered));
        const std::size_t lower = (remaining + static_cast<std::size_t>(max_gain) - 1) / static_cast<std::size_t>(max_gain);
        if (depth + lower >= best_.size())
            return;

        // fail-first: the uncovered requirement with the fewest coverers
        int pick = -1;
        std::size_t fewest = SIZE_MAX;
        for (int e = 0; e < 2 * d_; ++e) {
            if (!((uncovered >> e) & 1U))
                continue;
            const std::size_t options = coverers_[static_cast<std::size_t>(e)].size();
            if (options < fewest) {
                fewest = options;
                pick = e;
            }
        }

        std::vector<std::size_t> branches = coverers_[static_cast<std::size_t>(pick)];
        std::stable_sort(branches.begin(), branches.end(), [&](std::size_t a, std::size_t b) {
            return std::popcount(covers_[a] & uncovered) > std::popcount(covers_[b] & uncovered);
        });
        for (std::size_t col : branches) {
            chosen.push_back(col);
            search(uncovered & ~covers_[col], chosen);
            chosen.pop_back();
            if (depth + lower >= best_.size())
                return;
        }
    }

    int d_;
    std::uint64_t universe_;
    std::vector<std::uint64_t> covers_;
    std::vector<std::vector<std::size_t>> coverers_;
    std::vector<std::size_t> best_;
    std::unordered_map<std::uint64_t, std::size_t> memo_;
};

} // namespace

RankSolution solve_rank(const Smp& pattern)
{
    if (!avoidable(pattern))
        return {};
    if (pattern.dimension() > kMaxRankDimension || pattern.size() > kMaxRankColumns)
        fail(ErrorCode::CapacityExceeded, "rank solver handles d <= 24 and k <= 65536");
    CoverSolver solver(pattern);
    const auto picked = solver.solve();
    RankSolution out;
    out.rank = static_cast<int>(picked.size());
    for (std::size_t col : picked)
        out.columns.push_back(pattern.columns()[col]);
    return out;
}

std::optional<int> rank(const Smp& pattern)
{
    return solve_rank(pattern).rank;
}

AvoidabilityClass classify(const Smp& pattern)
{
    const auto r = rank(pattern);
    if (!r)
        return AvoidabilityClass::strongly_unavoidable_class();
    return AvoidabilityClass::avoidable_with_rank(*r);
}

} // namespace meshperm
