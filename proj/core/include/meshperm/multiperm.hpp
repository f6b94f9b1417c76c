#pragma once

#include "meshperm/sign_vector.hpp"

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace meshperm {

/// A d-dimensional permutation of length n.
///
/// Row 1 is the identity 1 2 ... n and is not stored; rows 2..d are stored
/// as permutations of {1..n}. Element i (1-based) is the column
/// (i, rows[2][i], ..., rows[d][i]). Immutable once built.
class MultiPerm {
public:
    /// `rows` are rows 2..d, so d = rows.size() + 1.
    static MultiPerm from_rows(std::vector<std::vector<int>> rows);
    /// `rows` are all d rows; columns are reordered so that row 1 becomes
    /// increasing and the other rows follow in lockstep.
    static MultiPerm from_full_rows(const std::vector<std::vector<int>>& rows);
    static MultiPerm identity(int d, int n);
    static MultiPerm empty(int d) { return identity(d, 0); }

    [[nodiscard]] int dimension() const noexcept { return d_; }
    [[nodiscard]] int size() const noexcept { return n_; }

    /// Coordinate `row` (1..d) of element `element` (1..n).
    [[nodiscard]] int at(int row, int element) const;
    /// Stored row r, 2 <= r <= d.
    [[nodiscard]] std::span<const int> row(int r) const;
    /// Rows 2..d.
    [[nodiscard]] std::vector<std::vector<int>> rows() const;
    /// Rows 1..d, row 1 explicit.
    [[nodiscard]] std::vector<std::vector<int>> full_rows() const;
    /// The d-tuple of element i.
    [[nodiscard]] std::vector<int> element(int i) const;

    friend bool operator==(const MultiPerm&, const MultiPerm&) = default;
    friend std::strong_ordering operator<=>(const MultiPerm&, const MultiPerm&) = default;

private:
    MultiPerm(int d, int n, std::vector<int> data);

    int d_ = 2;
    int n_ = 0;
    std::vector<int> data_; // (d-1) rows of n values, row-major
};

/// sgn(element j - element i), componentwise. 1-based indices, j != i.
SignVector sign_between(const MultiPerm& perm, int j, int i);

/// Complement of one row. For row >= 2 each value v becomes n+1-v. For
/// row 1 the identity row is complemented and the columns re-sorted, which
/// reverses the column order and leaves the other rows' values unchanged.
MultiPerm complement_row(const MultiPerm& perm, int row);

/// Result row i is `perm`'s row tau[i-1], then re-canonicalised.
MultiPerm permute_rows(const MultiPerm& perm, std::span<const int> tau);

/// Replaces element i (1-based) by a copy of `sigma`, order-isomorphically
/// in every coordinate. Result length n + m - 1.
MultiPerm inflate(const MultiPerm& perm, int i, const MultiPerm& sigma);

/// Inflates every element by `sigma`. Result length n * m.
MultiPerm inflate_all(const MultiPerm& perm, const MultiPerm& sigma);

/// "1 2 5 3 4; 5 1 2 4 3": rows 2..d separated by ';', entries by spaces
/// or commas. A row written without separators ("12534") is read digit by
/// digit.
MultiPerm parse_multiperm(std::string_view text);
std::string format_multiperm(const MultiPerm& perm);

bool is_permutation_of_1_to_n(std::span<const int> values);

} // namespace meshperm
