#include "meshperm/construct.hpp"

#include "meshperm/error.hpp"
#include "meshperm/occurrence.hpp"
#include "meshperm/rank.hpp"

#include <algorithm>
#include <array>

namespace meshperm {

std::vector<Sign> cyclic_signature(std::span<const int> tau)
{
    const std::size_t n = tau.size();
    std::vector<Sign> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(tau[i] < tau[(i + 1) % n] ? Sign::Plus : Sign::Minus);
    return out;
}

std::vector<int> perm_from_cyclic_signature(std::span<const Sign> signature)
{
    const std::size_t n = signature.size();
    if (n < 2)
        fail(ErrorCode::UnrealizableSignature, "signatures of length < 2 are constant");
    std::size_t plus = static_cast<std::size_t>(std::count(signature.begin(), signature.end(), Sign::Plus));
    std::size_t minus = n - plus;
    if (plus == 0 || minus == 0)
        fail(ErrorCode::UnrealizableSignature, "signature " + format_sign_word(signature) + " is constant");

    // Cyclic list of positions; out[p] is the sign of the arc p -> next[p].
    std::vector<std::size_t> next(n), prev(n);
    for (std::size_t i = 0; i < n; ++i) {
        next[i] = (i + 1) % n;
        prev[i] = (i + n - 1) % n;
    }
    std::vector<Sign> out(signature.begin(), signature.end());
    std::vector<bool> alive(n, true);
    std::vector<int> tau(n, 0);
    int value = static_cast<int>(n);
    std::size_t live = n;

    while (live > 2) {
        std::size_t peak = n;
        for (std::size_t t = 0; t < n; ++t)
            if (alive[t] && out[prev[t]] == Sign::Plus && out[t] == Sign::Minus) {
                peak = t;
                break;
            }
        if (peak == n)
            fail(ErrorCode::InternalError, "no cyclic peak in a non-constant word");

        tau[peak] = value--;
        const std::size_t before = prev[peak];
        const std::size_t after = next[peak];
        // The in-arc was '+' and the out-arc '-'; both disappear.
        --plus;
        --minus;
        Sign merged = Sign::Minus;
        if (minus == 0)
            merged = Sign::Minus;
        else if (plus == 0)
            merged = Sign::Plus;
        out[before] = merged;
        if (merged == Sign::Plus)
            ++plus;
        else
            ++minus;
        next[before] = after;
        prev[after] = before;
        alive[peak] = false;
        --live;
    }

    std::size_t a = 0;
    while (!alive[a])
        ++a;
    const std::size_t b = next[a];
    if (out[a] == Sign::Plus) {
        tau[a] = 1;
        tau[b] = 2;
    } else {
        tau[a] = 2;
        tau[b] = 1;
    }
    return tau;
}

MultiPerm build_avoider(const Smp& pattern, int n)
{
    const auto solution = solve_rank(pattern);
    if (!solution.rank)
        fail(ErrorCode::RankInfinite, format_smp(pattern) + " has infinite rank");
    if (n < *solution.rank)
        fail(ErrorCode::LengthTooShort, "every permutation of length " + std::to_string(n) + " < rank "
                                            + std::to_string(*solution.rank) + " contains the pattern");
    if (pattern.dimension() < 2)
        fail(ErrorCode::DimensionTooSmall, "avoiders need dimension >= 2");

    const int d = pattern.dimension();
    const auto& cols = solution.columns;
    const std::size_t k = cols.size();
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(d));
    for (int r = 1; r <= d; ++r) {
        std::vector<Sign> word;
        word.reserve(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c)
            word.push_back(cols[static_cast<std::size_t>(c) % k].at(r));
        rows.push_back(perm_from_cyclic_signature(word));
    }
    auto result = MultiPerm::from_full_rows(rows);
    if (!avoids(result, pattern))
        fail(ErrorCode::InternalError, "constructed permutation " + format_multiperm(result) + " does not avoid "
                                           + format_smp(pattern));
    return result;
}

MultiPerm build_simultaneous_avoider(std::span<const Smp> patterns, int min_length)
{
    if (patterns.empty())
        fail(ErrorCode::InvalidArgument, "need at least one pattern");
    if (min_length < 0)
        fail(ErrorCode::InvalidArgument, "negative minimum length");
    const int d = patterns.front().dimension();
    std::vector<int> lengths;
    for (const auto& p : patterns) {
        if (p.dimension() != d)
            fail(ErrorCode::DimensionMismatch, "patterns of different dimensions");
        const auto r = rank(p);
        if (!r)
            fail(ErrorCode::SomePatternUnavoidable, format_smp(p) + " is strongly unavoidable");
        lengths.push_back(*r);
    }
    if (patterns.size() == 1)
        return build_avoider(patterns.front(), std::max(min_length, lengths.front()));

    auto product = [&] {
        long long p = 1;
        for (int l : lengths) {
            p *= l;
            if (p >= min_length)
                return p;
        }
        return p;
    };
    while (product() < min_length)
        ++lengths.back();

    MultiPerm combined = build_avoider(patterns[0], lengths[0]);
    for (std::size_t i = 1; i < patterns.size(); ++i)
        combined = inflate_all(build_avoider(patterns[i], lengths[i]), combined);

    for (const auto& p : patterns)
        if (!avoids(combined, p))
            fail(ErrorCode::InternalError, "iterated inflation does not avoid " + format_smp(p));
    return combined;
}

MultiPerm witness_n_occurrences(const Smp& pattern, int n)
{
    if (n < 1)
        fail(ErrorCode::InvalidArgument, "witness length must be >= 1");
    if (contains_minus_antipodal_subset(pattern))
        fail(ErrorCode::HasMinusAntipodalSubset,
             format_smp(pattern) + " contains a minus-antipodal pattern; it occurs at most once");
    const int d = pattern.dimension();
    if (d < 2)
        fail(ErrorCode::DimensionTooSmall, "witnesses need dimension >= 2");

    // Pair keys have '+' in row 1; enumerate them in canonical order, which
    // treats row 2 as the most significant digit.
    std::optional<SignVector> key;
    for (std::uint64_t t = 0;; ++t) {
        std::uint64_t bits = 0;
        for (int r = 2; r <= d; ++r)
            if ((t >> (d - r)) & 1U)
                bits |= std::uint64_t{1} << (r - 1);
        const SignVector candidate(d, bits);
        if (!pattern.contains(candidate) && !pattern.contains(candidate.complement())) {
            key = candidate;
            break;
        }
    }

    MultiPerm result = MultiPerm::identity(d, n);
    for (int r = 2; r <= d; ++r)
        if (!key->is_plus(r))
            result = complement_row(result, r);

    if (count_occurrences(result, pattern) != static_cast<std::size_t>(n))
        fail(ErrorCode::InternalError, "witness does not have " + std::to_string(n) + " occurrences");
    return result;
}

namespace {

using Row3 = std::array<int, 3>;

constexpr Row3 k123{1, 2, 3};
constexpr Row3 k132{1, 3, 2};
constexpr Row3 k213{2, 1, 3};
constexpr Row3 k231{2, 3, 1};
constexpr Row3 k312{3, 1, 2};

// Per leading symbol, the rows assigned to symbols 0, 1, 2.
constexpr std::array<std::array<Row3, 3>, 3> kBijectionRows{{
    {k132, k231, k123},
    {k312, k213, k123},
    {k132, k213, k123},
}};

} // namespace

MultiPerm string_to_one_occurrence_perm(std::string_view word)
{
    if (word.size() < 2)
        fail(ErrorCode::DimensionTooSmall, "word length is the dimension and must be >= 2");
    for (char ch : word)
        if (ch != '0' && ch != '1' && ch != '2')
            fail(ErrorCode::BadAlphabet, std::string("symbol '") + ch + "' is not in {0,1,2}");
    if (word.find('0') == std::string_view::npos || word.find('1') == std::string_view::npos)
        fail(ErrorCode::MissingRequiredSymbol, "word must contain at least one 0 and at least one 1");

    const auto& table = kBijectionRows[static_cast<std::size_t>(word[0] - '0')];
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 1; i < word.size(); ++i) {
        const Row3& row = table[static_cast<std::size_t>(word[i] - '0')];
        rows.emplace_back(row.begin(), row.end());
    }
    return MultiPerm::from_rows(std::move(rows));
}

std::string one_occurrence_perm_to_string(const MultiPerm& perm)
{
    if (perm.size() != 3)
        fail(ErrorCode::NotInImage, "bijection image consists of length-3 permutations");
    std::vector<Row3> rows;
    for (int r = 2; r <= perm.dimension(); ++r) {
        const auto s = perm.row(r);
        rows.push_back(Row3{s[0], s[1], s[2]});
    }
    auto any = [&](const Row3& target) { return std::find(rows.begin(), rows.end(), target) != rows.end(); };

    std::size_t lead = 2;
    if (any(k231))
        lead = 0;
    else if (any(k312))
        lead = 1;

    const auto& table = kBijectionRows[lead];
    std::string word(1, static_cast<char>('0' + lead));
    for (const auto& row : rows) {
        const auto it = std::find(table.begin(), table.end(), row);
        if (it == table.end())
            fail(ErrorCode::NotInImage, format_multiperm(perm) + " is not in the image of the string map");
        word.push_back(static_cast<char>('0' + (it - table.begin())));
    }
    if (word.find('0') == std::string::npos || word.find('1') == std::string::npos)
        fail(ErrorCode::NotInImage, format_multiperm(perm) + " is not in the image of the string map");
    return word;
}

} // namespace meshperm
