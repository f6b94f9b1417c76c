#pragma once

#include "meshperm/bigint.hpp"
#include "meshperm/distribution_table.hpp"
#include "meshperm/pattern.hpp"

#include <span>
#include <string>
#include <vector>

namespace meshperm {

/// Dense polynomial in q with integer coefficients; coeffs[k] is [q^k].
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class QPoly {
public:
    QPoly() = default;
    QPoly(BigInt constant); // NOLINT(google-explicit-constructor)
    explicit QPoly(std::vector<BigInt> coeffs);

    static QPoly q() { return QPoly(std::vector<BigInt>{0, 1}); }
    static QPoly monomial(int power, BigInt coeff = 1);

    [[nodiscard]] const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] BigInt coeff(int k) const;
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] BigInt evaluate(const BigInt& q) const;
    /// "q^3+6q^2+12q+17"; "0" for the zero polynomial.
    [[nodiscard]] std::string str() const;

    QPoly& operator+=(const QPoly& other);
    QPoly& operator-=(const QPoly& other);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a);

    friend bool operator==(const QPoly&, const QPoly&) = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Power series in x truncated after x^N, with QPoly coefficients.
class SeriesQ {
public:
    explicit SeriesQ(int order);
    SeriesQ(int order, std::vector<QPoly> coeffs);

    [[nodiscard]] int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const QPoly& coeff(int n) const;
    void set(int n, QPoly value);

    [[nodiscard]] SeriesQ mul_x() const;
    [[nodiscard]] SeriesQ scaled(const QPoly& factor) const;
    /// 1/f; the constant term must be +1 or -1. Throws NotAUnit otherwise.
    [[nodiscard]] SeriesQ reciprocal() const;
    /// Substitutes q = value in every coefficient.
    [[nodiscard]] SeriesQ at_q(const BigInt& value) const;

    /// Binary operations truncate to the smaller order.
    friend SeriesQ operator+(const SeriesQ& a, const SeriesQ& b);
    friend SeriesQ operator-(const SeriesQ& a, const SeriesQ& b);
    friend SeriesQ operator*(const SeriesQ& a, const SeriesQ& b);

    friend bool operator==(const SeriesQ&, const SeriesQ&) = default;

    static SeriesQ constant(int order, QPoly value);

private:
    std::vector<QPoly> coeffs_;
};

/// F_d(x) = sum (n!)^(d-1) x^n.
SeriesQ f_d(int d, int order);

/// Closed forms for the five projective cases, generalized to dimension d.
SeriesQ case_formula(int case_id, int d, int order);
/// The d-dimensional pattern each case formula describes.
Smp case_pattern(int case_id, int d);

/// The 2^d - 2 column pattern: every column except (+..+) and (-..-).
Smp plus_antipodal_pattern(int d);

struct PlusAntipodalSeries {
    SeriesQ avoiders;     // A(x)
    SeriesQ distribution; // F(x, q)
};

/// A from a_{n+1} = ((n+1)!)^(d-1) - sum_{i<=n} a_i ((n-i)!)^(d-1), a_0 = 1,
/// and F = A / (1 - x q A).
PlusAntipodalSeries plus_antipodal_series(int d, int order);
/// A = F_d / (1 + x F_d) and F = F_d / (1 + x (1 - q) F_d).
PlusAntipodalSeries plus_antipodal_closed_form(int d, int order);

/// Distribution of the increasing pair pattern over length-3 permutations.
QPoly f3d_polynomial(int d);
/// 6^(d-1) - 3^d + 2^d.
BigInt smmp_avoider_count(int d);
BigInt stirling2(int n, int k);
/// q (q+1) ... (q+n-1).
QPoly rising_factorial_poly(int n);

struct Mismatch {
    int n = 0;
    int q_power = 0;
    BigInt expected; // from the formula
    BigInt actual;   // from the table

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct ReconcileReport {
    std::vector<Mismatch> mismatches;
    [[nodiscard]] bool passed() const noexcept { return mismatches.empty(); }
};

/// Compares [x^n q^k] of the formula against counts[k] of each table.
/// Throws TruncationTooShort if a table's n exceeds the formula's order.
ReconcileReport reconcile(const SeriesQ& formula, std::span<const DistributionTable> tables);

} // namespace meshperm
