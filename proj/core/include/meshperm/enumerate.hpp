#pragma once

#include "meshperm/bigint.hpp"
#include "meshperm/distribution_table.hpp"
#include "meshperm/multiperm.hpp"
#include "meshperm/occurrence.hpp"
#include "meshperm/pattern.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace meshperm {

struct EnumerationConfig {
    /// Maximum number of elementary occurrence checks a single call may plan.
    std::uint64_t budget = 1'000'000'000;
    int workers = 1;
};

/// Row values of one permutation in S^d_n: rows[r] is row r+2 (row 1 is
/// the identity and omitted). Valid only for the duration of a callback.
using RowsView = std::span<const std::vector<int>>;

/// Visits every d-dimensional permutation of length n sequentially, in
/// lexicographic order of the concatenated rows 2..d.
void for_each_multiperm(int d, int n, const std::function<void(RowsView)>& visit);

/// Exhaustive exact distributions. All throw BudgetExceeded when the planned
/// work exceeds config.budget. Results do not depend on config.workers.
DistributionTable distribution(const Smp& pattern, int n, const EnumerationConfig& config = {});
DistributionTable distribution(const MeshPattern& pattern, int n, const EnumerationConfig& config = {});
DistributionTable distribution(const MarkedSmp& pattern, int n, const EnumerationConfig& config = {});

/// |Av^d_n(P)| with an early exit on the first occurrence in each permutation.
BigInt count_avoiders(const Smp& pattern, int n, const EnumerationConfig& config = {});

struct ProjectiveLiftReport {
    bool equal = false;
    DistributionTable lifted;    // distribution of P in dimension d
    DistributionTable projected; // distribution of the projection in dimension d-1
};

/// Checks counts(P) == n! * counts(project(P, direction)) elementwise.
ProjectiveLiftReport projective_lift_check(const Smp& pattern, int direction, int n,
                                           const EnumerationConfig& config = {});

struct HyperplaneReductionCount {
    BigInt via_formula; // sum_k k (n-1)! f(n,k) over the reduced pattern
    BigInt direct;      // permutations with exactly one occurrence
};

/// Requires an i-hyperplane pattern strictly larger than its core, d >= 3.
HyperplaneReductionCount hyperplane_reduction_count(const Smp& pattern, int direction, int n,
                                                    const EnumerationConfig& config = {});

struct MaxOccurrenceCount {
    BigInt n_occurrences;      // permutations with n occurrences of {+..+, -..-}
    BigInt parallel_avoidance; // (d-1)-tuples with no pair ascending in every row
};

MaxOccurrenceCount count_max_occurrence(int d, int n, const EnumerationConfig& config = {});

/// The plus-antipodal pattern {+...+, -...-}.
Smp antipodal_pair_pattern(int d);

} // namespace meshperm
