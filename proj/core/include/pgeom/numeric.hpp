#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pgeom {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "num/den" or a bare integer; the result is canonicalized.
/// Throws Error(parse_error) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "num/den" with den > 0; integers print as "k/1".
std::string format_rational(const Rational& value);

/// Exact power q^e for small q.
BigInt big_pow(unsigned long base, unsigned long exponent);

/// Number of decimal digits of |x| (1 for zero).
std::size_t decimal_digits(const BigInt& x);

/// Smallest integer k with 2^k >= x, for rational x > 0.
long ceil_log2(const Rational& x);

}  // namespace pgeom
