#pragma once

#include "meshperm/multiperm.hpp"
#include "meshperm/pattern.hpp"
#include "meshperm/sign_vector.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace meshperm {

/// Cyclic signature of a permutation tau of length n: entry i < n is '+'
/// iff tau_i < tau_{i+1}; entry n is '+' iff tau_n < tau_1.
std::vector<Sign> cyclic_signature(std::span<const int> tau);

/// Some permutation whose cyclic signature is `signature`, built by peak
/// insertion: repeatedly give the largest unused value to a cyclic peak and
/// merge its two arcs (the merged arc takes '-' unless that would leave a
/// constant word). Throws UnrealizableSignature for constant words and
/// words shorter than 2.
std::vector<int> perm_from_cyclic_signature(std::span<const Sign> signature);

/// A length-n permutation avoiding P, following the periodic-signature
/// construction over a rank-achieving sub-pattern. The result is checked
/// with the occurrence module before it is returned.
MultiPerm build_avoider(const Smp& pattern, int n);

/// A common avoider of every pattern, of length >= min_length, built by
/// iterated inflation of individual avoiders.
MultiPerm build_simultaneous_avoider(std::span<const Smp> patterns, int min_length);

/// A length-n permutation with exactly n occurrences of P. Requires that P
/// misses some antipodal pair; uses the least such pair.
MultiPerm witness_n_occurrences(const Smp& pattern, int n);

/// Length-3 d-dimensional permutations with exactly one occurrence of the
/// increasing pair pattern, in bijection with words over {0,1,2} of length d
/// containing at least one 0 and at least one 1.
MultiPerm string_to_one_occurrence_perm(std::string_view word);
std::string one_occurrence_perm_to_string(const MultiPerm& perm);

} // namespace meshperm
