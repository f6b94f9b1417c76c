#include "meshperm/occurrence.hpp"

#include "meshperm/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace meshperm {

namespace {

void require_same_dimension(int a, int b)
{
    if (a != b)
        fail(ErrorCode::DimensionMismatch, "dimensions " + std::to_string(a) + " and " + std::to_string(b));
}

std::uint64_t sign_bits(const MultiPerm& perm, int j, int i)
{
    std::uint64_t bits = (j < i) ? 1U : 0U;
    for (int r = 2; r <= perm.dimension(); ++r) {
        const auto row = perm.row(r);
        if (row[static_cast<std::size_t>(j - 1)] < row[static_cast<std::size_t>(i - 1)])
            bits |= std::uint64_t{1} << (r - 1);
    }
    return bits;
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

bool is_occurrence(const MultiPerm& perm, int i, const Smp& pattern)
{
    require_same_dimension(perm.dimension(), pattern.dimension());
    if (i < 1 || i > perm.size())
        fail(ErrorCode::IndexOutOfRange, "element " + std::to_string(i) + " outside [1, " + std::to_string(perm.size()) + "]");
    for (int j = 1; j <= perm.size(); ++j)
        if (j != i && pattern.contains(SignVector(perm.dimension(), sign_bits(perm, j, i))))
            return false;
    return true;
}

std::vector<int> blocking_elements(const MultiPerm& perm, int i, const Smp& pattern)
{
    require_same_dimension(perm.dimension(), pattern.dimension());
    if (i < 1 || i > perm.size())
        fail(ErrorCode::IndexOutOfRange, "element " + std::to_string(i) + " outside [1, " + std::to_string(perm.size()) + "]");
    std::vector<int> out;
    for (int j = 1; j <= perm.size(); ++j)
        if (j != i && pattern.contains(SignVector(perm.dimension(), sign_bits(perm, j, i))))
            out.push_back(j);
    return out;
}

std::size_t count_occurrences(const MultiPerm& perm, const Smp& pattern)
{
    require_same_dimension(perm.dimension(), pattern.dimension());
    std::size_t count = 0;
    for (int i = 1; i <= perm.size(); ++i)
        if (is_occurrence(perm, i, pattern))
            ++count;
    return count;
}

bool avoids(const MultiPerm& perm, const Smp& pattern)
{
    require_same_dimension(perm.dimension(), pattern.dimension());
    for (int i = 1; i <= perm.size(); ++i)
        if (is_occurrence(perm, i, pattern))
            return false;
    return true;
}

MeshPattern::MeshPattern(MultiPerm pattern, std::vector<std::vector<int>> shading)
    : pattern_(std::move(pattern))
    , shading_(std::move(shading))
{
    const int d = pattern_.dimension();
    const int k = pattern_.size();
    for (const auto& cell : shading_) {
        if (static_cast<int>(cell.size()) != d)
            fail(ErrorCode::DimensionMismatch, "shaded cell has " + std::to_string(cell.size()) + " coordinates, expected "
                                                   + std::to_string(d));
        for (int c : cell)
            if (c < 0 || c > k)
                fail(ErrorCode::IndexOutOfRange, "shaded cell coordinate " + std::to_string(c) + " outside [0, "
                                                     + std::to_string(k) + "]");
    }
    std::sort(shading_.begin(), shading_.end());
    if (std::adjacent_find(shading_.begin(), shading_.end()) != shading_.end())
        fail(ErrorCode::DuplicateColumn, "shaded cell listed twice");
}

bool MeshPattern::is_shaded(std::span<const int> cell) const
{
    return std::binary_search(shading_.begin(), shading_.end(), cell,
                              [](const auto& a, const auto& b) {
                                  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                              });
}

MeshPattern increasing_pair_pattern(int d)
{
    return MeshPattern(MultiPerm::identity(d, 2), {});
}

std::size_t count_occurrences(const MultiPerm& perm, const MeshPattern& pattern)
{
    require_same_dimension(perm.dimension(), pattern.dimension());
    const int d = perm.dimension();
    const int n = perm.size();
    const int k = pattern.length();
    if (k > n)
        return 0;

    const MultiPerm& t = pattern.pattern();
    std::vector<int> chosen(static_cast<std::size_t>(k));
    std::iota(chosen.begin(), chosen.end(), 1);
    std::vector<bool> in_chosen(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> cell(static_cast<std::size_t>(d));
    std::size_t count = 0;

    while (true) {
        bool isomorphic = true;
        for (int r = 2; r <= d && isomorphic; ++r)
            for (int a = 0; a < k && isomorphic; ++a)
                for (int b = a + 1; b < k; ++b) {
                    const bool in_text = perm.at(r, chosen[static_cast<std::size_t>(a)]) < perm.at(r, chosen[static_cast<std::size_t>(b)]);
                    const bool in_pattern = t.at(r, a + 1) < t.at(r, b + 1);
                    if (in_text != in_pattern) {
                        isomorphic = false;
                        break;
                    }
                }

        if (isomorphic) {
            bool clean = true;
            if (!pattern.shading().empty()) {
                std::fill(in_chosen.begin(), in_chosen.end(), false);
                for (int c : chosen)
                    in_chosen[static_cast<std::size_t>(c)] = true;
                for (int x = 1; x <= n && clean; ++x) {
                    if (in_chosen[static_cast<std::size_t>(x)])
                        continue;
                    for (int r = 1; r <= d; ++r) {
                        const int v = perm.at(r, x);
                        int below = 0;
                        for (int c : chosen)
                            if (perm.at(r, c) < v)
                                ++below;
                        cell[static_cast<std::size_t>(r - 1)] = below;
                    }
                    if (pattern.is_shaded(cell))
                        clean = false;
                }
            }
            if (clean)
                ++count;
        }

        // next k-subset in lexicographic order
        int pos = k - 1;
        while (pos >= 0 && chosen[static_cast<std::size_t>(pos)] == n - k + pos + 1)
            --pos;
        if (pos < 0)
            break;
        ++chosen[static_cast<std::size_t>(pos)];
        for (int q = pos + 1; q < k; ++q)
            chosen[static_cast<std::size_t>(q)] = chosen[static_cast<std::size_t>(q - 1)] + 1;
    }
    return count;
}

Mark Mark::at_least(int x)
{
    if (x < 1)
        fail(ErrorCode::InvalidArgument, "mark lower bound must be >= 1");
    return Mark{x};
}

MarkedSmp::MarkedSmp(int d, std::vector<std::pair<SignVector, Mark>> entries)
    : d_(d)
    , entries_(std::move(entries))
{
    for (const auto& [column, mark] : entries_) {
        if (column.dimension() != d)
            fail(ErrorCode::RaggedColumns, "column " + column.str() + " does not have dimension " + std::to_string(d));
        if (mark.minimum && *mark.minimum < 1)
            fail(ErrorCode::InvalidArgument, "mark lower bound must be >= 1");
    }
    std::sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    const auto dup = std::adjacent_find(entries_.begin(), entries_.end(),
                                        [](const auto& a, const auto& b) { return a.first == b.first; });
    if (dup != entries_.end())
        fail(ErrorCode::DuplicateColumn, "column " + dup->first.str() + " marked twice");
}

MarkedSmp shaded_marked(const Smp& pattern)
{
    std::vector<std::pair<SignVector, Mark>> entries;
    for (const auto& c : pattern.columns())
        entries.emplace_back(c, Mark::shaded());
    return MarkedSmp(pattern.dimension(), std::move(entries));
}

MarkedSmp parse_marked(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        fail(ErrorCode::ParseError, "empty marked pattern text");
    std::vector<std::pair<SignVector, Mark>> entries;
    std::size_t start = 0;
    int d = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const auto token = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        const std::size_t colon = token.find(':');
        if (colon == std::string_view::npos)
            fail(ErrorCode::ParseError, "marked column '" + std::string(token) + "' lacks ':'");
        const auto column = SignVector::parse(trim(token.substr(0, colon)));
        if (d == 0)
            d = column.dimension();
        else if (column.dimension() != d)
            fail(ErrorCode::RaggedColumns, "marked columns of different lengths");
        const auto mark_text = trim(token.substr(colon + 1));
        if (mark_text == "#") {
            entries.emplace_back(column, Mark::shaded());
        } else {
            if (mark_text.empty() || mark_text.size() > 9
                || !std::all_of(mark_text.begin(), mark_text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                fail(ErrorCode::BadSymbol, "mark '" + std::string(mark_text) + "' is neither '#' nor a positive integer");
            entries.emplace_back(column, Mark::at_least(std::stoi(std::string(mark_text))));
        }
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return MarkedSmp(d, std::move(entries));
}

std::string format_marked(const MarkedSmp& pattern)
{
    std::string out;
    for (const auto& [column, mark] : pattern.entries()) {
        if (!out.empty())
            out.push_back(',');
        out += column.str();
        out.push_back(':');
        out += mark.is_shaded() ? std::string("#") : std::to_string(*mark.minimum);
    }
    return out;
}

bool is_occurrence(const MultiPerm& perm, int i, const MarkedSmp& pattern)
{
    require_same_dimension(perm.dimension(), pattern.dimension());
    if (i < 1 || i > perm.size())
        fail(ErrorCode::IndexOutOfRange, "element " + std::to_string(i) + " outside [1, " + std::to_string(perm.size()) + "]");
    const auto& entries = pattern.entries();
    std::vector<int> population(entries.size(), 0);
    for (int j = 1; j <= perm.size(); ++j) {
        if (j == i)
            continue;
        const SignVector octant(perm.dimension(), sign_bits(perm, j, i));
        const auto it = std::lower_bound(entries.begin(), entries.end(), octant,
                                         [](const auto& e, const SignVector& v) { return e.first < v; });
        if (it == entries.end() || it->first != octant)
            continue;
        if (it->second.is_shaded())
            return false;
        ++population[static_cast<std::size_t>(it - entries.begin())];
    }
    for (std::size_t e = 0; e < entries.size(); ++e)
        if (!entries[e].second.is_shaded() && population[e] < *entries[e].second.minimum)
            return false;
    return true;
}

std::size_t count_occurrences(const MultiPerm& perm, const MarkedSmp& pattern)
{
    require_same_dimension(perm.dimension(), pattern.dimension());
    std::size_t count = 0;
    for (int i = 1; i <= perm.size(); ++i)
        if (is_occurrence(perm, i, pattern))
            ++count;
    return count;
}

} // namespace meshperm
