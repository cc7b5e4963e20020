#pragma once

// Exact arithmetic used for every probability and count in the library.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace riffle {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "3", "-2/6", "0.25" or "1e-3"-free decimals into a reduced Rational.
/// Decimals are read exactly as an integer over a power of ten.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "num/den" with den > 0, e.g. "1/8", "0/1", "3/1".
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// num/den in lowest terms; den must be nonzero.
Rational ratio(const BigInt& num, const BigInt& den);

Rational pow(const Rational& base, unsigned long exponent);

BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);  // zero outside 0 <= k <= n

// Moebius function of a positive integer.
int mobius(long n);

}  // namespace riffle
