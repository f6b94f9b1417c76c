#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace meshperm {

enum class Sign : std::uint8_t { Plus, Minus };

constexpr Sign opposite(Sign s) noexcept { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr char to_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

/// Parses a word over {+,-}; throws BadSymbol on anything else.
std::vector<Sign> parse_sign_word(std::string_view text);
std::string format_sign_word(std::span<const Sign> word);

/// A d-tuple over {+,-}, i.e. one hyperoctant around a point.
///
/// Stored as a bit mask: bit (r-1) is set iff row r carries '-'. Rows are
/// 1-based in the public interface. Ordering is lexicographic over rows
/// 1..d with '+' < '-', which is the canonical column order of a pattern.
class SignVector {
public:
    static constexpr int kMaxDimension = 64;

    SignVector(int d, std::uint64_t minus_bits);

    static SignVector parse(std::string_view text);
    static SignVector all_plus(int d);
    static SignVector all_minus(int d);
    static SignVector from_signs(std::span<const Sign> signs);

    [[nodiscard]] int dimension() const noexcept { return d_; }
    [[nodiscard]] std::uint64_t minus_bits() const noexcept { return bits_; }

    [[nodiscard]] Sign at(int row) const;
    [[nodiscard]] bool is_plus(int row) const { return at(row) == Sign::Plus; }

    /// Componentwise complement c(C).
    [[nodiscard]] SignVector complement() const noexcept;
    [[nodiscard]] SignVector flipped(int row) const;
    /// Row `row` removed; dimension drops by one.
    [[nodiscard]] SignVector without_row(int row) const;
    /// Result row i is this vector's row tau[i-1].
    [[nodiscard]] SignVector permuted(std::span<const int> tau) const;

    [[nodiscard]] std::string str() const;

    friend bool operator==(const SignVector&, const SignVector&) = default;
    friend std::strong_ordering operator<=>(const SignVector& a, const SignVector& b) noexcept;

private:
    int d_;
    std::uint64_t bits_;
};

/// Mask with the low d bits set.
constexpr std::uint64_t low_bits(int d) noexcept
{
    return d >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << d) - 1);
}

} // namespace meshperm
