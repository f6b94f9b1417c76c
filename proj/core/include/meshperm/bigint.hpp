#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace meshperm {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(unsigned n);
BigInt power(const BigInt& base, unsigned exponent);
BigInt binomial(unsigned n, unsigned k);

/// (n!)^(d-1), the number of d-dimensional permutations of length n.
BigInt multiperm_count(int d, int n);

std::string to_decimal(const BigInt& value);
BigInt from_decimal(const std::string& text);

} // namespace meshperm
