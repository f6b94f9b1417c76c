#pragma once

// Brute-force reference implementations used only by tests. They work on
// plain vectors and strings and share no code with the library.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Rows = std::vector<std::vector<int>>; // all d rows, row 0 = 1..n

/// Every permutation of 1..n in lexicographic order.
std::vector<std::vector<int>> permutations(int n);

/// Every d-dimensional permutation of length n, row 0 the identity.
std::vector<Rows> multiperms(int d, int n);

/// Pattern columns as strings over {+,-}.
using Columns = std::set<std::string>;

/// Straight from the definition: element i occurs iff no j != i has its
/// sign word (sgn(x_j - x_i) in each row) among the columns.
int count_smp(const Rows& perm, const Columns& pattern);

/// Minimum number of columns that show both signs in every row; -1 if none.
int rank_by_subsets(const std::vector<std::string>& columns);

/// Occurrences of the unshaded increasing pair: pairs ascending in every row.
int count_increasing_pairs(const Rows& perm);

/// Elements with at least `minimum` others strictly above-right in every row.
int count_marked_all_plus(const Rows& perm, int minimum);

/// a_0..a_top for the 2^d - 2 column pattern, from its defining recurrence.
std::vector<std::uint64_t> plus_antipodal_avoiders(int d, int top);

/// Unsigned Stirling numbers of the first kind c(n, k).
std::uint64_t stirling1(int n, int k);
/// S(n, k) by inclusion-exclusion over surjections.
std::uint64_t stirling2(int n, int k);

std::uint64_t factorial(int n);
std::uint64_t ipow(std::uint64_t base, int e);

/// Random pattern: each of the 2^d columns kept with probability `density`.
std::vector<std::string> random_columns(std::mt19937_64& rng, int d, double density);

} // namespace oracle
