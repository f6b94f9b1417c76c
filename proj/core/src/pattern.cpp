#include "meshperm/pattern.hpp"

#include "meshperm/error.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace meshperm {

namespace {

void require_same_dimension(const Smp& a, const Smp& b)
{
    if (a.dimension() != b.dimension())
        fail(ErrorCode::DimensionMismatch,
             "patterns of dimension " + std::to_string(a.dimension()) + " and " + std::to_string(b.dimension()));
}

void require_row(const Smp& pattern, int row)
{
    if (row < 1 || row > pattern.dimension())
        fail(ErrorCode::IndexOutOfRange,
             "row " + std::to_string(row) + " outside [1, " + std::to_string(pattern.dimension()) + "]");
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Smp::Smp(int d, std::vector<SignVector> columns)
    : d_(d)
    , columns_(std::move(columns))
{
    if (d < 1 || d > SignVector::kMaxDimension)
        fail(ErrorCode::CapacityExceeded, "pattern dimension " + std::to_string(d) + " outside [1, 64]");
    for (const auto& c : columns_)
        if (c.dimension() != d)
            fail(ErrorCode::RaggedColumns, "column " + c.str() + " has dimension " + std::to_string(c.dimension())
                                                + ", expected " + std::to_string(d));
    std::sort(columns_.begin(), columns_.end());
    const auto dup = std::adjacent_find(columns_.begin(), columns_.end());
    if (dup != columns_.end())
        fail(ErrorCode::DuplicateColumn, "column " + dup->str() + " appears twice");
}

Smp Smp::empty(int d) { return Smp(d, {}); }

Smp Smp::full(int d)
{
    if (d < 1 || d >= 21)
        fail(ErrorCode::CapacityExceeded, "full pattern of dimension " + std::to_string(d) + " is too large");
    std::vector<SignVector> cols;
    cols.reserve(std::size_t{1} << d);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m)
        cols.emplace_back(d, m);
    return Smp(d, std::move(cols));
}

Smp Smp::from_member_mask(int d, std::uint64_t members)
{
    if (d < 1 || d > 6)
        fail(ErrorCode::CapacityExceeded, "member masks cover dimensions 1..6 only");
    const std::uint64_t count = std::uint64_t{1} << d;
    if (count < 64 && (members >> count) != 0)
        fail(ErrorCode::InvalidArgument, "member mask has bits beyond 2^d");
    std::vector<SignVector> cols;
    for (std::uint64_t m = 0; m < count; ++m)
        if ((members >> m) & 1U)
            cols.emplace_back(d, m);
    return Smp(d, std::move(cols));
}

bool Smp::contains(const SignVector& column) const
{
    return std::binary_search(columns_.begin(), columns_.end(), column);
}

bool Smp::is_subset_of(const Smp& other) const
{
    require_same_dimension(*this, other);
    return std::includes(other.columns_.begin(), other.columns_.end(), columns_.begin(), columns_.end());
}

Smp parse_smp(std::string_view text, std::optional<int> empty_dimension)
{
    text = trim(text);
    if (text.empty()) {
        if (!empty_dimension)
            fail(ErrorCode::ParseError, "empty pattern text needs an explicit dimension");
        return Smp::empty(*empty_dimension);
    }

    std::vector<std::string_view> tokens;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        tokens.push_back(trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }

    const std::size_t d = tokens.front().size();
    if (d == 0)
        fail(ErrorCode::ParseError, "empty column in pattern text");
    if (d > static_cast<std::size_t>(SignVector::kMaxDimension))
        fail(ErrorCode::CapacityExceeded, "pattern dimension exceeds 64");

    std::vector<SignVector> columns;
    for (std::string_view token : tokens) {
        if (token.size() != d)
            fail(ErrorCode::RaggedColumns, "column '" + std::string(token) + "' has length " + std::to_string(token.size())
                                               + ", expected " + std::to_string(d));
        std::uint64_t fixed = 0;
        std::vector<int> star_rows;
        for (std::size_t r = 0; r < d; ++r) {
            switch (token[r]) {
            case '+': break;
            case '-': fixed |= std::uint64_t{1} << r; break;
            case '*': star_rows.push_back(static_cast<int>(r)); break;
            default:
                fail(ErrorCode::BadSymbol, std::string("unexpected symbol '") + token[r] + "' in pattern");
            }
        }
        if (star_rows.size() >= 21 || columns.size() + (std::size_t{1} << star_rows.size()) > Smp::kMaxColumns)
            fail(ErrorCode::CapacityExceeded, "star expansion produces too many columns");
        for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << star_rows.size()); ++choice) {
            std::uint64_t bits = fixed;
            for (std::size_t s = 0; s < star_rows.size(); ++s)
                if ((choice >> s) & 1U)
                    bits |= std::uint64_t{1} << star_rows[s];
            columns.emplace_back(static_cast<int>(d), bits);
        }
    }
    return Smp(static_cast<int>(d), std::move(columns));
}

std::string format_smp(const Smp& pattern)
{
    std::string out;
    for (const auto& c : pattern.columns()) {
        if (!out.empty())
            out.push_back(',');
        out += c.str();
    }
    return out;
}

Smp permute_rows(const Smp& pattern, std::span<const int> tau)
{
    const int d = pattern.dimension();
    if (static_cast<int>(tau.size()) != d)
        fail(ErrorCode::DimensionMismatch, "row permutation has length " + std::to_string(tau.size()));
    std::vector<bool> seen(static_cast<std::size_t>(d) + 1, false);
    for (int v : tau) {
        if (v < 1 || v > d || seen[static_cast<std::size_t>(v)])
            fail(ErrorCode::IndexOutOfRange, "row permutation is not a bijection on {1..d}");
        seen[static_cast<std::size_t>(v)] = true;
    }
    std::vector<SignVector> cols;
    cols.reserve(pattern.size());
    for (const auto& c : pattern.columns())
        cols.push_back(c.permuted(tau));
    return Smp(d, std::move(cols));
}

Smp complement_row(const Smp& pattern, int row)
{
    require_row(pattern, row);
    std::vector<SignVector> cols;
    cols.reserve(pattern.size());
    for (const auto& c : pattern.columns())
        cols.push_back(c.flipped(row));
    return Smp(pattern.dimension(), std::move(cols));
}

Smp complement_all(const Smp& pattern)
{
    std::vector<SignVector> cols;
    cols.reserve(pattern.size());
    for (const auto& c : pattern.columns())
        cols.push_back(c.complement());
    return Smp(pattern.dimension(), std::move(cols));
}

Smp pattern_union(const Smp& a, const Smp& b)
{
    require_same_dimension(a, b);
    std::vector<SignVector> cols;
    std::set_union(a.columns().begin(), a.columns().end(), b.columns().begin(), b.columns().end(),
                   std::back_inserter(cols));
    return Smp(a.dimension(), std::move(cols));
}

Smp pattern_intersection(const Smp& a, const Smp& b)
{
    require_same_dimension(a, b);
    std::vector<SignVector> cols;
    std::set_intersection(a.columns().begin(), a.columns().end(), b.columns().begin(), b.columns().end(),
                          std::back_inserter(cols));
    return Smp(a.dimension(), std::move(cols));
}

bool is_projective(const Smp& pattern, int direction)
{
    require_row(pattern, direction);
    return std::all_of(pattern.columns().begin(), pattern.columns().end(),
                       [&](const SignVector& c) { return pattern.contains(c.flipped(direction)); });
}

Smp project(const Smp& pattern, int direction)
{
    if (!is_projective(pattern, direction))
        fail(ErrorCode::NotProjective, format_smp(pattern) + " is not projective in direction " + std::to_string(direction));
    if (pattern.dimension() < 2)
        fail(ErrorCode::DimensionTooSmall, "cannot project a 1-dimensional pattern");
    std::vector<SignVector> cols;
    for (const auto& c : pattern.columns())
        if (c.is_plus(direction))
            cols.push_back(c.without_row(direction));
    return Smp(pattern.dimension() - 1, std::move(cols));
}

Smp lift(const Smp& pattern, int direction)
{
    const int d = pattern.dimension() + 1;
    if (direction < 1 || direction > d)
        fail(ErrorCode::IndexOutOfRange, "lift direction outside [1, " + std::to_string(d) + "]");
    if (d > SignVector::kMaxDimension)
        fail(ErrorCode::CapacityExceeded, "lifted dimension exceeds 64");
    std::vector<SignVector> cols;
    cols.reserve(pattern.size() * 2);
    for (const auto& c : pattern.columns()) {
        const std::uint64_t b = c.minus_bits();
        const std::uint64_t low = b & low_bits(direction - 1);
        const std::uint64_t high = (b >> (direction - 1)) << direction;
        cols.emplace_back(d, low | high);
        cols.emplace_back(d, low | high | (std::uint64_t{1} << (direction - 1)));
    }
    return Smp(d, std::move(cols));
}

bool is_plus_antipodal(const Smp& pattern)
{
    return std::all_of(pattern.columns().begin(), pattern.columns().end(),
                       [&](const SignVector& c) { return pattern.contains(c.complement()); });
}

bool is_minus_antipodal(const Smp& pattern)
{
    const int d = pattern.dimension();
    if (d > 63 || pattern.size() != (std::size_t{1} << (d - 1)))
        return false;
    return std::none_of(pattern.columns().begin(), pattern.columns().end(),
                        [&](const SignVector& c) { return pattern.contains(c.complement()); });
}

SignVector antipodal_key(const SignVector& column)
{
    return std::min(column, column.complement());
}

bool contains_minus_antipodal_subset(const Smp& pattern)
{
    const int d = pattern.dimension();
    if (d > 63 || pattern.size() < (std::size_t{1} << (d - 1)))
        return false;
    std::unordered_set<std::uint64_t> pairs;
    for (const auto& c : pattern.columns())
        pairs.insert(antipodal_key(c).minus_bits());
    return pairs.size() == (std::size_t{1} << (d - 1));
}

Smp hyperplane_core(int d, int direction)
{
    if (d < 1 || d >= 22)
        fail(ErrorCode::CapacityExceeded, "hyperplane core of dimension " + std::to_string(d) + " is too large");
    if (direction < 1 || direction > d)
        fail(ErrorCode::IndexOutOfRange, "direction outside [1, " + std::to_string(d) + "]");
    std::vector<SignVector> cols;
    const std::uint64_t row_bit = std::uint64_t{1} << (direction - 1);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m)
        if ((m & row_bit) == 0)
            cols.emplace_back(d, m);
    return Smp(d, std::move(cols));
}

bool is_hyperplane(const Smp& pattern, int direction)
{
    require_row(pattern, direction);
    const int d = pattern.dimension();
    if (d > 63)
        return false;
    std::size_t plus_columns = 0;
    for (const auto& c : pattern.columns())
        if (c.is_plus(direction))
            ++plus_columns;
    return plus_columns == (std::size_t{1} << (d - 1));
}

} // namespace meshperm
