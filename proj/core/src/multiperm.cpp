#include "meshperm/multiperm.hpp"

#include "meshperm/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace meshperm {

namespace {

void require_element(const MultiPerm& perm, int i)
{
    if (i < 1 || i > perm.size())
        fail(ErrorCode::IndexOutOfRange,
             "element " + std::to_string(i) + " outside [1, " + std::to_string(perm.size()) + "]");
}

void require_row_index(const MultiPerm& perm, int r)
{
    if (r < 1 || r > perm.dimension())
        fail(ErrorCode::IndexOutOfRange,
             "row " + std::to_string(r) + " outside [1, " + std::to_string(perm.dimension()) + "]");
}

void validate_row(std::span<const int> row, std::size_t expected)
{
    if (row.size() != expected)
        fail(ErrorCode::NotAPermutation,
             "row of length " + std::to_string(row.size()) + ", expected " + std::to_string(expected));
    if (!is_permutation_of_1_to_n(row))
        fail(ErrorCode::NotAPermutation, "row is not a permutation of 1.." + std::to_string(expected));
}

std::vector<int> parse_row(std::string_view text)
{
    std::vector<int> row;
    const bool has_separator = text.find_first_of(" \t,") != std::string_view::npos;
    if (!has_separator) {
        for (char ch : text) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                fail(ErrorCode::ParseError, std::string("unexpected character '") + ch + "' in permutation row");
            row.push_back(ch - '0');
        }
        return row;
    }
    std::string token;
    auto flush = [&] {
        if (token.empty())
            return;
        for (char ch : token)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                fail(ErrorCode::ParseError, "bad entry '" + token + "' in permutation row");
        if (token.size() > 9)
            fail(ErrorCode::ParseError, "entry '" + token + "' too large");
        row.push_back(std::stoi(token));
        token.clear();
    };
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == ',')
            flush();
        else
            token.push_back(ch);
    }
    flush();
    return row;
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

bool is_permutation_of_1_to_n(std::span<const int> values)
{
    const std::size_t n = values.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : values) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

MultiPerm::MultiPerm(int d, int n, std::vector<int> data)
    : d_(d)
    , n_(n)
    , data_(std::move(data))
{
}

MultiPerm MultiPerm::from_rows(std::vector<std::vector<int>> rows)
{
    const int d = static_cast<int>(rows.size()) + 1;
    if (d < 2)
        fail(ErrorCode::DimensionTooSmall, "a multidimensional permutation needs at least one non-identity row");
    const std::size_t n = rows.front().size();
    std::vector<int> data;
    data.reserve(rows.size() * n);
    for (const auto& row : rows) {
        validate_row(row, n);
        data.insert(data.end(), row.begin(), row.end());
    }
    return MultiPerm(d, static_cast<int>(n), std::move(data));
}

MultiPerm MultiPerm::from_full_rows(const std::vector<std::vector<int>>& rows)
{
    const int d = static_cast<int>(rows.size());
    if (d < 2)
        fail(ErrorCode::DimensionTooSmall, "dimension " + std::to_string(d) + " < 2");
    const std::size_t n = rows.front().size();
    for (const auto& row : rows)
        validate_row(row, n);

    // order[v-1] = column whose first-row value is v
    std::vector<std::size_t> order(n);
    for (std::size_t c = 0; c < n; ++c)
        order[static_cast<std::size_t>(rows[0][c] - 1)] = c;

    std::vector<int> data;
    data.reserve(static_cast<std::size_t>(d - 1) * n);
    for (int r = 1; r < d; ++r)
        for (std::size_t pos = 0; pos < n; ++pos)
            data.push_back(rows[static_cast<std::size_t>(r)][order[pos]]);
    return MultiPerm(d, static_cast<int>(n), std::move(data));
}

MultiPerm MultiPerm::identity(int d, int n)
{
    if (d < 2)
        fail(ErrorCode::DimensionTooSmall, "dimension " + std::to_string(d) + " < 2");
    if (n < 0)
        fail(ErrorCode::InvalidArgument, "negative length");
    std::vector<int> data;
    data.reserve(static_cast<std::size_t>(d - 1) * static_cast<std::size_t>(n));
    for (int r = 1; r < d; ++r)
        for (int i = 1; i <= n; ++i)
            data.push_back(i);
    return MultiPerm(d, n, std::move(data));
}

int MultiPerm::at(int row, int element) const
{
    require_row_index(*this, row);
    require_element(*this, element);
    if (row == 1)
        return element;
    return data_[static_cast<std::size_t>(row - 2) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(element - 1)];
}

std::span<const int> MultiPerm::row(int r) const
{
    if (r < 2 || r > d_)
        fail(ErrorCode::IndexOutOfRange, "stored rows are 2.." + std::to_string(d_));
    return std::span<const int>(data_).subspan(static_cast<std::size_t>(r - 2) * static_cast<std::size_t>(n_),
                                               static_cast<std::size_t>(n_));
}

std::vector<std::vector<int>> MultiPerm::rows() const
{
    std::vector<std::vector<int>> out;
    for (int r = 2; r <= d_; ++r) {
        auto s = row(r);
        out.emplace_back(s.begin(), s.end());
    }
    return out;
}

std::vector<std::vector<int>> MultiPerm::full_rows() const
{
    std::vector<std::vector<int>> out;
    out.emplace_back(static_cast<std::size_t>(n_));
    std::iota(out.front().begin(), out.front().end(), 1);
    for (auto& r : rows())
        out.push_back(std::move(r));
    return out;
}

std::vector<int> MultiPerm::element(int i) const
{
    require_element(*this, i);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(d_));
    for (int r = 1; r <= d_; ++r)
        out.push_back(at(r, i));
    return out;
}

SignVector sign_between(const MultiPerm& perm, int j, int i)
{
    require_element(perm, i);
    require_element(perm, j);
    if (i == j)
        fail(ErrorCode::SameIndex, "sign_between needs two distinct elements");
    std::uint64_t bits = 0;
    for (int r = 1; r <= perm.dimension(); ++r)
        if (perm.at(r, j) < perm.at(r, i))
            bits |= std::uint64_t{1} << (r - 1);
    return SignVector(perm.dimension(), bits);
}

MultiPerm complement_row(const MultiPerm& perm, int row)
{
    require_row_index(perm, row);
    const int n = perm.size();
    auto rows = perm.rows();
    if (row == 1) {
        for (auto& r : rows)
            std::reverse(r.begin(), r.end());
    } else {
        for (int& v : rows[static_cast<std::size_t>(row - 2)])
            v = n + 1 - v;
    }
    if (rows.empty() || n == 0)
        return perm;
    return MultiPerm::from_rows(std::move(rows));
}

MultiPerm permute_rows(const MultiPerm& perm, std::span<const int> tau)
{
    const int d = perm.dimension();
    if (static_cast<int>(tau.size()) != d)
        fail(ErrorCode::DimensionMismatch, "row permutation has length " + std::to_string(tau.size()));
    std::vector<bool> seen(static_cast<std::size_t>(d) + 1, false);
    for (int v : tau) {
        if (v < 1 || v > d || seen[static_cast<std::size_t>(v)])
            fail(ErrorCode::IndexOutOfRange, "row permutation is not a bijection on {1..d}");
        seen[static_cast<std::size_t>(v)] = true;
    }
    if (perm.size() == 0)
        return perm;
    const auto full = perm.full_rows();
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(d));
    for (int t : tau)
        out.push_back(full[static_cast<std::size_t>(t - 1)]);
    return MultiPerm::from_full_rows(out);
}

MultiPerm inflate(const MultiPerm& perm, int i, const MultiPerm& sigma)
{
    if (perm.dimension() != sigma.dimension())
        fail(ErrorCode::DimensionMismatch, "inflation needs equal dimensions");
    require_element(perm, i);
    const int n = perm.size();
    const int m = sigma.size();
    if (m == 0)
        fail(ErrorCode::InvalidArgument, "cannot inflate by the empty permutation");

    std::vector<std::vector<int>> rows;
    for (int r = 2; r <= perm.dimension(); ++r) {
        const auto pi = perm.row(r);
        const auto sg = sigma.row(r);
        const int pivot = pi[static_cast<std::size_t>(i - 1)];
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(n + m - 1));
        for (int s = 1; s <= n; ++s) {
            if (s == i) {
                for (int v : sg)
                    out.push_back(pivot - 1 + v);
                continue;
            }
            const int v = pi[static_cast<std::size_t>(s - 1)];
            out.push_back(v < pivot ? v : v + m - 1);
        }
        rows.push_back(std::move(out));
    }
    return MultiPerm::from_rows(std::move(rows));
}

MultiPerm inflate_all(const MultiPerm& perm, const MultiPerm& sigma)
{
    if (perm.dimension() != sigma.dimension())
        fail(ErrorCode::DimensionMismatch, "inflation needs equal dimensions");
    const int n = perm.size();
    const int m = sigma.size();
    if (n == 0 || m == 0)
        return MultiPerm::empty(perm.dimension());

    std::vector<std::vector<int>> rows;
    for (int r = 2; r <= perm.dimension(); ++r) {
        const auto pi = perm.row(r);
        const auto sg = sigma.row(r);
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
        for (int block : pi)
            for (int v : sg)
                out.push_back((block - 1) * m + v);
        rows.push_back(std::move(out));
    }
    return MultiPerm::from_rows(std::move(rows));
}

MultiPerm parse_multiperm(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        fail(ErrorCode::ParseError, "empty permutation text");
    std::vector<std::vector<int>> rows;
    std::size_t start = 0;
    while (true) {
        const std::size_t semi = text.find(';', start);
        const auto piece = trim(text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start));
        rows.push_back(parse_row(piece));
        if (semi == std::string_view::npos)
            break;
        start = semi + 1;
    }
    return MultiPerm::from_rows(std::move(rows));
}

std::string format_multiperm(const MultiPerm& perm)
{
    std::ostringstream out;
    for (int r = 2; r <= perm.dimension(); ++r) {
        if (r > 2)
            out << "; ";
        bool first = true;
        for (int v : perm.row(r)) {
            if (!first)
                out << ' ';
            out << v;
            first = false;
        }
    }
    return out.str();
}

} // namespace meshperm
