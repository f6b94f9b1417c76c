#include "meshperm/enumerate.hpp"

#include "meshperm/error.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace meshperm {

BigInt DistributionTable::total() const
{
    BigInt sum = 0;
    for (const auto& c : counts)
        sum += c;
    return sum;
}

BigInt DistributionTable::count(int k) const
{
    if (k < 0 || static_cast<std::size_t>(k) >= counts.size())
        return 0;
    return counts[static_cast<std::size_t>(k)];
}

namespace {

constexpr std::uint64_t kMaxChunks = 256;
constexpr int kMaxLookupDimension = 24;

void require_shape(int d, int n)
{
    if (d < 2)
        fail(ErrorCode::DimensionTooSmall, "dimension " + std::to_string(d) + " < 2");
    if (n < 0)
        fail(ErrorCode::InvalidArgument, "negative length");
}

void require_budget(int d, int n, const BigInt& per_permutation, const EnumerationConfig& config)
{
    if (config.workers < 1)
        fail(ErrorCode::InvalidArgument, "workers must be >= 1");
    if (config.budget < 1)
        fail(ErrorCode::InvalidArgument, "budget must be >= 1");
    const BigInt planned = multiperm_count(d, n) * per_permutation;
    if (planned > BigInt(config.budget))
        fail(ErrorCode::BudgetExceeded, "enumerating S^" + std::to_string(d) + "_" + std::to_string(n) + " needs "
                                            + to_decimal(planned) + " checks, budget is " + std::to_string(config.budget));
}

/// Lexicographic unranking of a permutation of 1..n.
std::vector<int> unrank(int n, std::uint64_t rank)
{
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<std::uint64_t> fact(static_cast<std::size_t>(n) + 1, 1);
    for (int i = 1; i <= n; ++i)
        fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * static_cast<std::uint64_t>(i);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = n; i >= 1; --i) {
        const std::uint64_t f = fact[static_cast<std::size_t>(i - 1)];
        const std::size_t idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
}

/// Walks the permutations whose first stored row has lexicographic rank in
/// [begin, end), with the remaining rows running through all of S_n.
template <class Visit>
void walk_range(int d, int n, std::uint64_t begin, std::uint64_t end, Visit&& visit)
{
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(d - 1));
    rows[0] = unrank(n, begin);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        rows[r].resize(static_cast<std::size_t>(n));
        std::iota(rows[r].begin(), rows[r].end(), 1);
    }
    for (std::uint64_t outer = begin; outer < end; ++outer) {
        while (true) {
            visit(RowsView(rows));
            std::size_t r = rows.size() - 1;
            bool advanced = false;
            for (; r >= 1; --r)
                if (std::next_permutation(rows[r].begin(), rows[r].end())) {
                    advanced = true;
                    break;
                }
            if (!advanced)
                break;
        }
        std::next_permutation(rows[0].begin(), rows[0].end());
    }
}

/// Runs a tally over S^d_n. `make_kernel()` yields a fresh callable
/// kernel(RowsView, std::span<std::uint64_t>) per chunk; chunk tallies are
/// merged in chunk order into arbitrary-precision totals.
template <class MakeKernel>
std::vector<BigInt> tally(int d, int n, std::size_t slots, int workers, MakeKernel&& make_kernel)
{
    std::uint64_t first_rows = 1;
    for (int i = 2; i <= n; ++i)
        first_rows *= static_cast<std::uint64_t>(i);
    const std::uint64_t chunks = std::min(first_rows, kMaxChunks);

    std::vector<std::vector<std::uint64_t>> partial(chunks, std::vector<std::uint64_t>(slots, 0));
    auto run_chunk = [&](std::uint64_t c) {
        const std::uint64_t begin = first_rows * c / chunks;
        const std::uint64_t end = first_rows * (c + 1) / chunks;
        auto kernel = make_kernel();
        std::span<std::uint64_t> out(partial[c]);
        walk_range(d, n, begin, end, [&](RowsView rows) { kernel(rows, out); });
    };

    const auto thread_count = static_cast<std::uint64_t>(std::max(1, workers));
    if (thread_count == 1 || chunks == 1) {
        for (std::uint64_t c = 0; c < chunks; ++c)
            run_chunk(c);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        for (std::uint64_t t = 0; t < std::min(thread_count, chunks); ++t)
            pool.emplace_back([&] {
                for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1))
                    run_chunk(c);
            });
        for (auto& th : pool)
            th.join();
    }

    std::vector<BigInt> totals(slots, 0);
    for (const auto& p : partial)
        for (std::size_t s = 0; s < slots; ++s)
            totals[s] += p[s];
    return totals;
}

std::vector<unsigned char> membership_table(const Smp& pattern)
{
    if (pattern.dimension() > kMaxLookupDimension)
        fail(ErrorCode::CapacityExceeded, "enumeration supports d <= 24");
    std::vector<unsigned char> table(std::size_t{1} << pattern.dimension(), 0);
    for (const auto& c : pattern.columns())
        table[c.minus_bits()] = 1;
    return table;
}

/// Sign mask of element j relative to element i (0-based, j > i).
inline std::uint64_t forward_mask(RowsView rows, std::size_t i, std::size_t j)
{
    std::uint64_t mask = 0;
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r][j] < rows[r][i])
            mask |= std::uint64_t{2} << r;
    return mask;
}

/// Occurrence count of an SMP by one sweep over unordered pairs.
class PairSweepKernel {
public:
    PairSweepKernel(const std::vector<unsigned char>& table, int d, int n)
        : table_(table)
        , full_(low_bits(d))
        , alive_(static_cast<std::size_t>(n))
    {
    }

    std::size_t occurrences(RowsView rows)
    {
        const std::size_t n = alive_.size();
        std::fill(alive_.begin(), alive_.end(), 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const std::uint64_t m = forward_mask(rows, i, j);
                if (table_[m])
                    alive_[i] = 0;
                if (table_[~m & full_])
                    alive_[j] = 0;
            }
        return static_cast<std::size_t>(std::count(alive_.begin(), alive_.end(), 1));
    }

private:
    const std::vector<unsigned char>& table_;
    std::uint64_t full_;
    std::vector<unsigned char> alive_;
};

MultiPerm materialise(RowsView rows)
{
    return MultiPerm::from_rows(std::vector<std::vector<int>>(rows.begin(), rows.end()));
}

std::string mesh_id(const MeshPattern& pattern)
{
    std::string id = "T=" + format_multiperm(pattern.pattern()) + ";shading=";
    for (std::size_t c = 0; c < pattern.shading().size(); ++c) {
        if (c)
            id += ' ';
        for (std::size_t r = 0; r < pattern.shading()[c].size(); ++r) {
            if (r)
                id += '.';
            id += std::to_string(pattern.shading()[c][r]);
        }
    }
    return id;
}

} // namespace

void for_each_multiperm(int d, int n, const std::function<void(RowsView)>& visit)
{
    require_shape(d, n);
    std::uint64_t first_rows = 1;
    for (int i = 2; i <= n; ++i)
        first_rows *= static_cast<std::uint64_t>(i);
    walk_range(d, n, 0, first_rows, visit);
}

Smp antipodal_pair_pattern(int d)
{
    return Smp(d, {SignVector::all_plus(d), SignVector::all_minus(d)});
}

DistributionTable distribution(const Smp& pattern, int n, const EnumerationConfig& config)
{
    const int d = pattern.dimension();
    require_shape(d, n);
    require_budget(d, n, BigInt(n) * n, config);
    const auto table = membership_table(pattern);

    DistributionTable out{d, n, format_smp(pattern), {}};
    out.counts = tally(d, n, static_cast<std::size_t>(n) + 1, config.workers, [&] {
        return [kernel = PairSweepKernel(table, d, n)](RowsView rows, std::span<std::uint64_t> t) mutable {
            ++t[kernel.occurrences(rows)];
        };
    });
    return out;
}

DistributionTable distribution(const MeshPattern& pattern, int n, const EnumerationConfig& config)
{
    const int d = pattern.dimension();
    require_shape(d, n);
    const int k = pattern.length();
    const BigInt subsets = binomial(static_cast<unsigned>(n), static_cast<unsigned>(std::min(k, n)));
    require_budget(d, n, subsets * std::max(1, n) * std::max(1, n), config);
    const std::size_t slots = (k > n) ? 1 : static_cast<std::size_t>(subsets) + 1;

    DistributionTable out{d, n, mesh_id(pattern), {}};
    out.counts = tally(d, n, slots, config.workers, [&] {
        return [&pattern](RowsView rows, std::span<std::uint64_t> t) {
            ++t[count_occurrences(materialise(rows), pattern)];
        };
    });
    return out;
}

DistributionTable distribution(const MarkedSmp& pattern, int n, const EnumerationConfig& config)
{
    const int d = pattern.dimension();
    require_shape(d, n);
    require_budget(d, n, BigInt(n) * n, config);

    DistributionTable out{d, n, format_marked(pattern), {}};
    out.counts = tally(d, n, static_cast<std::size_t>(n) + 1, config.workers, [&] {
        return [&pattern](RowsView rows, std::span<std::uint64_t> t) {
            ++t[count_occurrences(materialise(rows), pattern)];
        };
    });
    return out;
}

BigInt count_avoiders(const Smp& pattern, int n, const EnumerationConfig& config)
{
    const int d = pattern.dimension();
    require_shape(d, n);
    require_budget(d, n, BigInt(n) * n, config);
    const auto table = membership_table(pattern);

    const auto totals = tally(d, n, 1, config.workers, [&] {
        return [&table, d](RowsView rows, std::span<std::uint64_t> t) {
            const std::size_t len = rows.empty() ? 0 : rows.front().size();
            for (std::size_t i = 0; i < len; ++i) {
                bool occurrence = true;
                for (std::size_t j = 0; j < len && occurrence; ++j) {
                    if (j == i)
                        continue;
                    std::uint64_t mask = j < i ? 1U : 0U;
                    for (std::size_t r = 0; r < rows.size(); ++r)
                        if (rows[r][j] < rows[r][i])
                            mask |= std::uint64_t{2} << r;
                    if (table[mask & low_bits(d)])
                        occurrence = false;
                }
                if (occurrence)
                    return;
            }
            ++t[0];
        };
    });
    return totals[0];
}

ProjectiveLiftReport projective_lift_check(const Smp& pattern, int direction, int n, const EnumerationConfig& config)
{
    if (direction < 1 || direction > pattern.dimension())
        fail(ErrorCode::IndexOutOfRange, "direction outside [1, " + std::to_string(pattern.dimension()) + "]");
    if (!is_projective(pattern, direction))
        fail(ErrorCode::NotProjective, format_smp(pattern) + " is not projective in direction " + std::to_string(direction));
    if (pattern.dimension() < 3)
        fail(ErrorCode::DimensionTooSmall, "projection of a 2-dimensional pattern is 1-dimensional");

    ProjectiveLiftReport report;
    report.lifted = distribution(pattern, n, config);
    report.projected = distribution(project(pattern, direction), n, config);
    const BigInt factor = factorial(static_cast<unsigned>(n));
    report.equal = report.lifted.counts.size() == report.projected.counts.size();
    for (std::size_t k = 0; report.equal && k < report.lifted.counts.size(); ++k)
        report.equal = report.lifted.counts[k] == factor * report.projected.counts[k];
    return report;
}

HyperplaneReductionCount hyperplane_reduction_count(const Smp& pattern, int direction, int n,
                                                    const EnumerationConfig& config)
{
    const int d = pattern.dimension();
    if (direction < 1 || direction > d)
        fail(ErrorCode::IndexOutOfRange, "direction outside [1, " + std::to_string(d) + "]");
    if (d < 3)
        fail(ErrorCode::DimensionTooSmall, "hyperplane reduction needs d >= 3");
    if (n < 1)
        fail(ErrorCode::InvalidArgument, "hyperplane reduction needs n >= 1");
    if (!is_hyperplane(pattern, direction))
        fail(ErrorCode::NotHyperplane, format_smp(pattern) + " is not a " + std::to_string(direction) + "-hyperplane pattern");

    std::vector<SignVector> reduced;
    for (const auto& c : pattern.columns())
        if (!c.is_plus(direction))
            reduced.push_back(c.without_row(direction));
    if (reduced.empty())
        fail(ErrorCode::InvalidArgument, "pattern equals its hyperplane core; its distribution is 1 + q(F_d - 1)");

    const auto f = distribution(Smp(d - 1, std::move(reduced)), n, config);
    HyperplaneReductionCount out;
    const BigInt lifts = factorial(static_cast<unsigned>(n - 1));
    for (int k = 1; k <= n; ++k)
        out.via_formula += BigInt(k) * lifts * f.count(k);
    out.direct = distribution(pattern, n, config).count(1);
    return out;
}

MaxOccurrenceCount count_max_occurrence(int d, int n, const EnumerationConfig& config)
{
    require_shape(d, n);
    require_budget(d, n, BigInt(n) * n * 2, config);
    const Smp pattern = antipodal_pair_pattern(d);
    const auto table = membership_table(pattern);

    const auto totals = tally(d, n, 2, config.workers, [&] {
        return [kernel = PairSweepKernel(table, d, n), n](RowsView rows, std::span<std::uint64_t> t) mutable {
            if (kernel.occurrences(rows) == static_cast<std::size_t>(n))
                ++t[0];
            const std::size_t len = static_cast<std::size_t>(n);
            for (std::size_t i = 0; i < len; ++i)
                for (std::size_t j = i + 1; j < len; ++j) {
                    bool ascending_everywhere = true;
                    for (const auto& row : rows)
                        if (row[i] > row[j]) {
                            ascending_everywhere = false;
                            break;
                        }
                    if (ascending_everywhere)
                        return;
                }
            ++t[1];
        };
    });
    return {totals[0], totals[1]};
}

} // namespace meshperm
