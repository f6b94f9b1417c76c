#include "meshperm/sign_vector.hpp"

#include "meshperm/error.hpp"


namespace meshperm {

std::vector<Sign> parse_sign_word(std::string_view text)
{
    std::vector<Sign> word;
    word.reserve(text.size());
    for (char ch : text) {
        if (ch == '+')
            word.push_back(Sign::Plus);
        else if (ch == '-')
            word.push_back(Sign::Minus);
        else
            fail(ErrorCode::BadSymbol, std::string("unexpected symbol '") + ch + "' in sign word");
    }
    return word;
}

std::string format_sign_word(std::span<const Sign> word)
{
    std::string out;
    out.reserve(word.size());
    for (Sign s : word)
        out.push_back(to_char(s));
    return out;
}

SignVector::SignVector(int d, std::uint64_t minus_bits)
    : d_(d)
    , bits_(minus_bits)
{
    if (d < 1 || d > kMaxDimension)
        fail(ErrorCode::CapacityExceeded, "sign vector dimension " + std::to_string(d) + " outside [1, 64]");
    if ((minus_bits & ~low_bits(d)) != 0)
        fail(ErrorCode::InvalidArgument, "sign vector bits exceed its dimension");
}

SignVector SignVector::parse(std::string_view text)
{
    return from_signs(parse_sign_word(text));
}

SignVector SignVector::all_plus(int d) { return SignVector(d, 0); }
SignVector SignVector::all_minus(int d) { return SignVector(d, low_bits(d)); }

SignVector SignVector::from_signs(std::span<const Sign> signs)
{
    const int d = static_cast<int>(signs.size());
    if (d < 1 || d > kMaxDimension)
        fail(ErrorCode::CapacityExceeded, "sign vector dimension " + std::to_string(d) + " outside [1, 64]");
    std::uint64_t bits = 0;
    for (int r = 0; r < d; ++r)
        if (signs[static_cast<std::size_t>(r)] == Sign::Minus)
            bits |= std::uint64_t{1} << r;
    return SignVector(d, bits);
}

Sign SignVector::at(int row) const
{
    if (row < 1 || row > d_)
        fail(ErrorCode::IndexOutOfRange, "row " + std::to_string(row) + " outside [1, " + std::to_string(d_) + "]");
    return ((bits_ >> (row - 1)) & 1U) ? Sign::Minus : Sign::Plus;
}

SignVector SignVector::complement() const noexcept
{
    SignVector out = *this;
    out.bits_ = ~bits_ & low_bits(d_);
    return out;
}

SignVector SignVector::flipped(int row) const
{
    if (row < 1 || row > d_)
        fail(ErrorCode::IndexOutOfRange, "row " + std::to_string(row) + " outside [1, " + std::to_string(d_) + "]");
    SignVector out = *this;
    out.bits_ ^= std::uint64_t{1} << (row - 1);
    return out;
}

SignVector SignVector::without_row(int row) const
{
    if (row < 1 || row > d_)
        fail(ErrorCode::IndexOutOfRange, "row " + std::to_string(row) + " outside [1, " + std::to_string(d_) + "]");
    if (d_ == 1)
        fail(ErrorCode::DimensionTooSmall, "cannot drop the only row of a sign vector");
    const std::uint64_t low = bits_ & low_bits(row - 1);
    const std::uint64_t high = (bits_ >> row) << (row - 1);
    return SignVector(d_ - 1, low | high);
}

SignVector SignVector::permuted(std::span<const int> tau) const
{
    if (static_cast<int>(tau.size()) != d_)
        fail(ErrorCode::DimensionMismatch, "row permutation has wrong length");
    std::uint64_t bits = 0;
    for (int i = 0; i < d_; ++i) {
        const int src = tau[static_cast<std::size_t>(i)];
        if (src < 1 || src > d_)
            fail(ErrorCode::IndexOutOfRange, "row permutation entry out of range");
        if ((bits_ >> (src - 1)) & 1U)
            bits |= std::uint64_t{1} << i;
    }
    return SignVector(d_, bits);
}

std::string SignVector::str() const
{
    std::string out(static_cast<std::size_t>(d_), '+');
    for (int r = 0; r < d_; ++r)
        if ((bits_ >> r) & 1U)
            out[static_cast<std::size_t>(r)] = '-';
    return out;
}

std::strong_ordering operator<=>(const SignVector& a, const SignVector& b) noexcept
{
    if (a.d_ != b.d_)
        return a.d_ <=> b.d_;
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0)
        return std::strong_ordering::equal;
    // First differing row decides; '+' (bit clear) sorts first.
    const std::uint64_t lowest = diff & (~diff + 1);
    return (a.bits_ & lowest) ? std::strong_ordering::greater : std::strong_ordering::less;
}

} // namespace meshperm
