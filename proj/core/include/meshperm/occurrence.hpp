#pragma once

#include "meshperm/multiperm.hpp"
#include "meshperm/pattern.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace meshperm {

// Singleton mesh patterns.

/// Element i (1-based) is an occurrence of P iff no other element j has
/// sgn(element j - element i) in P.
bool is_occurrence(const MultiPerm& perm, int i, const Smp& pattern);
/// The elements j that stop element i from being an occurrence.
std::vector<int> blocking_elements(const MultiPerm& perm, int i, const Smp& pattern);
std::size_t count_occurrences(const MultiPerm& perm, const Smp& pattern);
bool avoids(const MultiPerm& perm, const Smp& pattern);

// General d-dimensional mesh patterns.

/// A pattern permutation of length k together with shaded cells.
///
/// A cell is a d-tuple (c_1, ..., c_d) over {0..k}: in coordinate r it is
/// the open slab strictly between the c_r-th and (c_r+1)-th smallest
/// coordinate-r values of the occurrence (0 = below all, k = above all).
/// For coordinate 1 the values are positions, so the slab is the gap
/// between consecutive chosen indices.
class MeshPattern {
public:
    MeshPattern(MultiPerm pattern, std::vector<std::vector<int>> shading);

    [[nodiscard]] const MultiPerm& pattern() const noexcept { return pattern_; }
    [[nodiscard]] const std::vector<std::vector<int>>& shading() const noexcept { return shading_; }
    [[nodiscard]] int dimension() const noexcept { return pattern_.dimension(); }
    [[nodiscard]] int length() const noexcept { return pattern_.size(); }
    [[nodiscard]] bool is_shaded(std::span<const int> cell) const;

    friend bool operator==(const MeshPattern&, const MeshPattern&) = default;

private:
    MultiPerm pattern_;
    std::vector<std::vector<int>> shading_; // sorted, distinct
};

/// ((12, ..., 12), no shading): the classical increasing pair in d dimensions.
MeshPattern increasing_pair_pattern(int d);

/// Number of index sets i_1 < ... < i_k forming an occurrence.
std::size_t count_occurrences(const MultiPerm& perm, const MeshPattern& pattern);

// Marked singleton patterns.

/// Either the octant must be empty (shaded) or hold at least `minimum`
/// other elements.
struct Mark {
    std::optional<int> minimum; // nullopt = shaded

    static Mark shaded() { return Mark{std::nullopt}; }
    static Mark at_least(int x);
    [[nodiscard]] bool is_shaded() const noexcept { return !minimum.has_value(); }

    friend bool operator==(const Mark&, const Mark&) = default;
};

class MarkedSmp {
public:
    MarkedSmp(int d, std::vector<std::pair<SignVector, Mark>> entries);

    [[nodiscard]] int dimension() const noexcept { return d_; }
    [[nodiscard]] const std::vector<std::pair<SignVector, Mark>>& entries() const noexcept { return entries_; }

    friend bool operator==(const MarkedSmp&, const MarkedSmp&) = default;

private:
    int d_;
    std::vector<std::pair<SignVector, Mark>> entries_; // sorted by column
};

/// The marked pattern with every column of P shaded.
MarkedSmp shaded_marked(const Smp& pattern);

/// "++:#,+-:2": '#' marks a shaded octant, an integer x >= 1 a lower bound.
MarkedSmp parse_marked(std::string_view text);
std::string format_marked(const MarkedSmp& pattern);

bool is_occurrence(const MultiPerm& perm, int i, const MarkedSmp& pattern);
std::size_t count_occurrences(const MultiPerm& perm, const MarkedSmp& pattern);

} // namespace meshperm
