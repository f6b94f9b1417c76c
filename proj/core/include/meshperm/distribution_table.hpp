#pragma once

#include "meshperm/bigint.hpp"

#include <string>
#include <vector>

namespace meshperm {

/// counts[k] = number of permutations in S^d_n with exactly k occurrences.
struct DistributionTable {
    int d = 2;
    int n = 0;
    std::string pattern_id;
    std::vector<BigInt> counts; // size n + 1

    [[nodiscard]] BigInt total() const;
    [[nodiscard]] BigInt count(int k) const;

    friend bool operator==(const DistributionTable&, const DistributionTable&) = default;
};

} // namespace meshperm
