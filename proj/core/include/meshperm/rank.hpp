#pragma once

#include "meshperm/pattern.hpp"

#include <optional>
#include <vector>

namespace meshperm {

/// Solver practicality caps; larger instances throw CapacityExceeded.
inline constexpr int kMaxRankDimension = 24;
inline constexpr std::size_t kMaxRankColumns = std::size_t{1} << 16;

/// No row of T(P) is constant. One pass over the columns, O(d*k).
/// The empty pattern is not avoidable.
bool avoidable(const Smp& pattern);

struct RankSolution {
    std::optional<int> rank;         // nullopt = infinite
    std::vector<SignVector> columns; // a rank-achieving sub-pattern (empty if infinite)
};

/// Exact minimum sub-pattern whose every row sees both signs.
///
/// Branch and bound over a set-cover instance with universe {row r needs +,
/// row r needs -}. Seeded by a greedy cover; pruned by the incumbent, a
/// ceil(uncovered / best coverage) bound, and memoisation of uncovered
/// states; branches on the uncovered requirement with the fewest covering
/// columns.
RankSolution solve_rank(const Smp& pattern);

std::optional<int> rank(const Smp& pattern);

struct AvoidabilityClass {
    bool avoidable = false;
    std::optional<int> rank; // set iff avoidable

    [[nodiscard]] bool strongly_unavoidable() const noexcept { return !avoidable; }
    static AvoidabilityClass strongly_unavoidable_class() { return {}; }
    static AvoidabilityClass avoidable_with_rank(int r) { return {true, r}; }

    friend bool operator==(const AvoidabilityClass&, const AvoidabilityClass&) = default;
};

AvoidabilityClass classify(const Smp& pattern);

} // namespace meshperm
