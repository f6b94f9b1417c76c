#pragma once

#include "meshperm/sign_vector.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace meshperm {

/// A singleton mesh pattern: a set of distinct sign vectors of one dimension.
///
/// Columns are kept sorted in canonical order, so equality is structural and
/// formatting is stable. The empty pattern is legal; every element of every
/// permutation is an occurrence of it.
class Smp {
public:
    /// Largest column set we are willing to materialise (star expansion, full()).
    static constexpr std::size_t kMaxColumns = std::size_t{1} << 20;

    Smp(int d, std::vector<SignVector> columns);

    static Smp empty(int d);
    /// All 2^d columns.
    static Smp full(int d);
    /// The d-SMP whose columns are exactly the set bits of `members`, where
    /// bit m stands for the sign vector with minus_bits m. Requires d <= 6.
    static Smp from_member_mask(int d, std::uint64_t members);

    [[nodiscard]] int dimension() const noexcept { return d_; }
    [[nodiscard]] std::size_t size() const noexcept { return columns_.size(); }
    [[nodiscard]] bool is_empty() const noexcept { return columns_.empty(); }
    [[nodiscard]] std::span<const SignVector> columns() const noexcept { return columns_; }
    [[nodiscard]] bool contains(const SignVector& column) const;
    /// P is a subset of `other` (same dimension).
    [[nodiscard]] bool is_subset_of(const Smp& other) const;

    friend bool operator==(const Smp&, const Smp&) = default;

private:
    int d_;
    std::vector<SignVector> columns_;
};

/// Text grammar: pattern := column (',' column)* ; column := [+-*]{d}.
/// Star rows expand to both signs. Empty (or whitespace-only) text yields the
/// empty pattern only when `empty_dimension` is supplied.
Smp parse_smp(std::string_view text, std::optional<int> empty_dimension = std::nullopt);
std::string format_smp(const Smp& pattern);

// Symmetries generated by row permutations and row complements.

/// Result row i is P's row tau[i-1]; tau is a 1-based permutation of {1..d}.
Smp permute_rows(const Smp& pattern, std::span<const int> tau);
Smp complement_row(const Smp& pattern, int row);
/// Every column replaced by its complement c(C).
Smp complement_all(const Smp& pattern);

Smp pattern_union(const Smp& a, const Smp& b);
Smp pattern_intersection(const Smp& a, const Smp& b);

bool is_projective(const Smp& pattern, int direction);
/// Drops row `direction`; throws NotProjective if the pairing condition fails.
Smp project(const Smp& pattern, int direction);
/// Inverse of project: inserts a star row at position `direction`.
Smp lift(const Smp& pattern, int direction);

bool is_plus_antipodal(const Smp& pattern);
bool is_minus_antipodal(const Smp& pattern);
/// True iff some minus-antipodal pattern is a subset, i.e. every antipodal
/// pair {C, c(C)} has a representative in P.
bool contains_minus_antipodal_subset(const Smp& pattern);
/// Canonical key of the antipodal pair containing `column`: min(C, c(C)).
SignVector antipodal_key(const SignVector& column);

/// All 2^(d-1) columns with '+' in row `direction`.
Smp hyperplane_core(int d, int direction);
bool is_hyperplane(const Smp& pattern, int direction);

} // namespace meshperm
