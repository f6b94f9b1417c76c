#include "meshperm/bigint.hpp"

#include "meshperm/error.hpp"

namespace meshperm {

BigInt factorial(unsigned n)
{
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i)
        result *= i;
    return result;
}

BigInt power(const BigInt& base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

BigInt binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt multiperm_count(int d, int n)
{
    if (d < 1 || n < 0)
        fail(ErrorCode::InvalidArgument, "multiperm_count needs d >= 1 and n >= 0");
    return power(factorial(static_cast<unsigned>(n)), static_cast<unsigned>(d - 1));
}

std::string to_decimal(const BigInt& value)
{
    return value.str();
}

BigInt from_decimal(const std::string& text)
{
    if (text.empty())
        fail(ErrorCode::ParseError, "empty integer literal");
    std::size_t start = (text[0] == '-') ? 1 : 0;
    if (start == text.size())
        fail(ErrorCode::ParseError, "bad integer literal '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            fail(ErrorCode::ParseError, "bad integer literal '" + text + "'");
    return BigInt(text);
}

} // namespace meshperm
