#include "meshperm/series.hpp"

#include "meshperm/error.hpp"

#include <algorithm>

namespace meshperm {

// QPoly

QPoly::QPoly(BigInt constant)
    : coeffs_{std::move(constant)}
{
    trim();
}

QPoly::QPoly(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs))
{
    trim();
}

QPoly QPoly::monomial(int power, BigInt coeff)
{
    if (power < 0)
        fail(ErrorCode::InvalidArgument, "negative power of q");
    std::vector<BigInt> c(static_cast<std::size_t>(power) + 1, 0);
    c.back() = std::move(coeff);
    return QPoly(std::move(c));
}

void QPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigInt QPoly::coeff(int k) const
{
    if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size())
        return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

BigInt QPoly::evaluate(const BigInt& q) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * q + *it;
    return acc;
}

std::string QPoly::str() const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0)
            continue;
        const BigInt mag = c < 0 ? BigInt(-c) : c;
        if (c < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        if (mag != 1 || k == 0)
            out += to_decimal(mag);
        if (k >= 1)
            out += 'q';
        if (k >= 2)
            out += '^' + std::to_string(k);
    }
    return out;
}

QPoly& QPoly::operator+=(const QPoly& other)
{
    if (coeffs_.size() < other.coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
        coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& other)
{
    if (coeffs_.size() < other.coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
        coeffs_[k] -= other.coeffs_[k];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a)
{
    std::vector<BigInt> c = a.coeffs_;
    for (auto& v : c)
        v = -v;
    return QPoly(std::move(c));
}

// SeriesQ

SeriesQ::SeriesQ(int order)
{
    if (order < 0)
        fail(ErrorCode::InvalidArgument, "negative truncation order");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

SeriesQ::SeriesQ(int order, std::vector<QPoly> coeffs)
    : SeriesQ(order)
{
    if (coeffs.size() > coeffs_.size())
        coeffs.resize(coeffs_.size());
    std::move(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

SeriesQ SeriesQ::constant(int order, QPoly value)
{
    SeriesQ s(order);
    s.coeffs_[0] = std::move(value);
    return s;
}

const QPoly& SeriesQ::coeff(int n) const
{
    if (n < 0 || n > order())
        fail(ErrorCode::TruncationTooShort, "x^" + std::to_string(n) + " is beyond order " + std::to_string(order()));
    return coeffs_[static_cast<std::size_t>(n)];
}

void SeriesQ::set(int n, QPoly value)
{
    if (n < 0 || n > order())
        fail(ErrorCode::TruncationTooShort, "x^" + std::to_string(n) + " is beyond order " + std::to_string(order()));
    coeffs_[static_cast<std::size_t>(n)] = std::move(value);
}

SeriesQ SeriesQ::mul_x() const
{
    SeriesQ s(order());
    for (int n = order(); n >= 1; --n)
        s.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n - 1)];
    return s;
}

SeriesQ SeriesQ::scaled(const QPoly& factor) const
{
    SeriesQ s(order());
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        s.coeffs_[n] = coeffs_[n] * factor;
    return s;
}

SeriesQ SeriesQ::reciprocal() const
{
    const QPoly& c0 = coeffs_[0];
    if (c0.degree() != 0 || (c0.coeff(0) != 1 && c0.coeff(0) != -1))
        fail(ErrorCode::NotAUnit, "constant term " + c0.str() + " is not a unit");
    const BigInt inv = c0.coeff(0); // +1 and -1 are their own inverses

    // g_n = -inv * sum_{k=1..n} f_k g_{n-k}
    SeriesQ g(order());
    g.coeffs_[0] = QPoly(inv);
    for (int n = 1; n <= order(); ++n) {
        QPoly acc;
        for (int k = 1; k <= n; ++k)
            acc += coeffs_[static_cast<std::size_t>(k)] * g.coeffs_[static_cast<std::size_t>(n - k)];
        g.coeffs_[static_cast<std::size_t>(n)] = acc * QPoly(-inv);
    }
    return g;
}

SeriesQ SeriesQ::at_q(const BigInt& value) const
{
    SeriesQ s(order());
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        s.coeffs_[n] = QPoly(coeffs_[n].evaluate(value));
    return s;
}

SeriesQ operator+(const SeriesQ& a, const SeriesQ& b)
{
    SeriesQ s(std::min(a.order(), b.order()));
    for (int n = 0; n <= s.order(); ++n)
        s.coeffs_[static_cast<std::size_t>(n)] = a.coeff(n) + b.coeff(n);
    return s;
}

SeriesQ operator-(const SeriesQ& a, const SeriesQ& b)
{
    SeriesQ s(std::min(a.order(), b.order()));
    for (int n = 0; n <= s.order(); ++n)
        s.coeffs_[static_cast<std::size_t>(n)] = a.coeff(n) - b.coeff(n);
    return s;
}

SeriesQ operator*(const SeriesQ& a, const SeriesQ& b)
{
    SeriesQ s(std::min(a.order(), b.order()));
    for (int n = 0; n <= s.order(); ++n) {
        QPoly acc;
        for (int k = 0; k <= n; ++k)
            acc += a.coeff(k) * b.coeff(n - k);
        s.coeffs_[static_cast<std::size_t>(n)] = std::move(acc);
    }
    return s;
}

// Generators

namespace {

void require_dimension(int d)
{
    if (d < 2)
        fail(ErrorCode::DimensionTooSmall, "dimension " + std::to_string(d) + " < 2");
}

BigInt fact_pow(int n, int e)
{
    return power(factorial(static_cast<unsigned>(n)), static_cast<unsigned>(e));
}

std::string stars(int count)
{
    return std::string(static_cast<std::size_t>(count), '*');
}

} // namespace

SeriesQ f_d(int d, int order)
{
    require_dimension(d);
    SeriesQ s(order);
    for (int n = 0; n <= order; ++n)
        s.set(n, QPoly(fact_pow(n, d - 1)));
    return s;
}

SeriesQ case_formula(int case_id, int d, int order)
{
    require_dimension(d);
    const QPoly q = QPoly::q();
    SeriesQ s(order);
    switch (case_id) {
    case 1:
        for (int n = 0; n <= order; ++n)
            s.set(n, rising_factorial_poly(n) * QPoly(fact_pow(n, d - 2)));
        return s;
    case 2: {
        const SeriesQ one = SeriesQ::constant(order, QPoly(1));
        return one + (f_d(d, order) - one).scaled(q);
    }
    case 3: {
        const SeriesQ f2 = f_d(2, order);
        const SeriesQ one = SeriesQ::constant(order, QPoly(1));
        const SeriesQ g = f2 * (one + f2.mul_x().scaled(QPoly(1) - q)).reciprocal();
        for (int n = 0; n <= order; ++n)
            s.set(n, g.coeff(n) * QPoly(fact_pow(n, d - 2)));
        return s;
    }
    case 4:
        for (int n = 1; n <= order; ++n)
            s.set(n, QPoly(fact_pow(n, d - 2) * factorial(static_cast<unsigned>(n - 1))));
        return f_d(d, order) + s.scaled(q - QPoly(1));
    case 5:
        if (order >= 1)
            s.set(1, q - QPoly(1));
        return f_d(d, order) + s;
    default:
        fail(ErrorCode::UnknownCase, "case " + std::to_string(case_id) + " is not in 1..5");
    }
}

Smp case_pattern(int case_id, int d)
{
    require_dimension(d);
    switch (case_id) {
    case 1:
        return parse_smp("++" + stars(d - 2));
    case 2:
        return parse_smp("+" + stars(d - 1));
    case 3:
        return parse_smp("+-" + stars(d - 2) + ",-+" + stars(d - 2));
    case 4:
        return parse_smp("++" + stars(d - 2) + ",+-" + stars(d - 2) + ",--" + stars(d - 2));
    case 5:
        return parse_smp(stars(d));
    default:
        fail(ErrorCode::UnknownCase, "case " + std::to_string(case_id) + " is not in 1..5");
    }
}

Smp plus_antipodal_pattern(int d)
{
    require_dimension(d);
    if (d > 20)
        fail(ErrorCode::CapacityExceeded, "plus-antipodal pattern needs 2^d columns");
    std::vector<SignVector> cols;
    const std::uint64_t all = low_bits(d);
    for (std::uint64_t bits = 1; bits < all; ++bits)
        cols.emplace_back(d, bits);
    return Smp(d, std::move(cols));
}

PlusAntipodalSeries plus_antipodal_series(int d, int order)
{
    require_dimension(d);
    std::vector<BigInt> a(static_cast<std::size_t>(order) + 1, 0);
    a[0] = 1;
    for (int m = 0; m + 1 <= order; ++m) {
        BigInt value = fact_pow(m + 1, d - 1);
        for (int i = 0; i <= m; ++i)
            value -= a[static_cast<std::size_t>(i)] * fact_pow(m - i, d - 1);
        a[static_cast<std::size_t>(m + 1)] = value;
    }
    SeriesQ avoiders(order);
    for (int n = 0; n <= order; ++n)
        avoiders.set(n, QPoly(a[static_cast<std::size_t>(n)]));
    const SeriesQ one = SeriesQ::constant(order, QPoly(1));
    SeriesQ distribution = avoiders * (one - avoiders.mul_x().scaled(QPoly::q())).reciprocal();
    return {std::move(avoiders), std::move(distribution)};
}

PlusAntipodalSeries plus_antipodal_closed_form(int d, int order)
{
    const SeriesQ fd = f_d(d, order);
    const SeriesQ one = SeriesQ::constant(order, QPoly(1));
    SeriesQ avoiders = fd * (one + fd.mul_x()).reciprocal();
    SeriesQ distribution = fd * (one + fd.mul_x().scaled(QPoly(1) - QPoly::q())).reciprocal();
    return {std::move(avoiders), std::move(distribution)};
}

QPoly f3d_polynomial(int d)
{
    require_dimension(d);
    const auto p = [](int base, int e) { return power(BigInt(base), static_cast<unsigned>(e)); };
    return QPoly(std::vector<BigInt>{p(6, d - 1) - p(3, d) + p(2, d), p(3, d) - p(2, d + 1) + 1, 2 * (p(2, d - 1) - 1), 1});
}

BigInt smmp_avoider_count(int d)
{
    require_dimension(d);
    return f3d_polynomial(d).coeff(0);
}

BigInt stirling2(int n, int k)
{
    if (n < 0 || k < 0)
        fail(ErrorCode::InvalidArgument, "stirling2 needs n, k >= 0");
    if (k > n)
        return 0;
    // Row-by-row: S(m, j) = j S(m-1, j) + S(m-1, j-1).
    std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int j = std::min(m, k); j >= 0; --j)
            row[static_cast<std::size_t>(j)] = j == 0 ? BigInt(0)
                                                      : BigInt(j) * row[static_cast<std::size_t>(j)]
                                                            + row[static_cast<std::size_t>(j - 1)];
    return row[static_cast<std::size_t>(k)];
}

QPoly rising_factorial_poly(int n)
{
    if (n < 0)
        fail(ErrorCode::InvalidArgument, "negative rising factorial length");
    QPoly out(1);
    for (int i = 0; i < n; ++i)
        out = out * (QPoly::q() + QPoly(i));
    return out;
}

ReconcileReport reconcile(const SeriesQ& formula, std::span<const DistributionTable> tables)
{
    ReconcileReport report;
    for (const auto& table : tables) {
        if (table.n > formula.order())
            fail(ErrorCode::TruncationTooShort, "table for n=" + std::to_string(table.n)
                                                    + " exceeds formula order " + std::to_string(formula.order()));
        const QPoly& expected = formula.coeff(table.n);
        const int top = std::max(expected.degree(), static_cast<int>(table.counts.size()) - 1);
        for (int k = 0; k <= top; ++k) {
            BigInt want = expected.coeff(k);
            BigInt got = table.count(k);
            if (want != got)
                report.mismatches.push_back({table.n, k, std::move(want), std::move(got)});
        }
    }
    return report;
}

} // namespace meshperm
