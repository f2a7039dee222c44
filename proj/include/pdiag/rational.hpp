#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pdiag {

using Integer = mpz_class;
using Rational = mpq_class;

Integer power(const Integer& base, unsigned long exponent);

/// num/den in lowest terms with a positive denominator. GMP arithmetic and
/// comparisons assume canonical operands, so build fractions through this.
/// Throws std::invalid_argument when den is zero.
Rational make_fraction(const Integer& num, const Integer& den);

/// "num/den", always with an explicit denominator ("6/1").
std::string to_fraction_string(const Rational& value);

/// Accepts "num/den" or a bare integer; the result is canonicalized.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_fraction(std::string_view text);

/// Decimal rendering with `digits` places after the point, rounded half-to-even.
/// Trailing zeros (and a bare trailing point) are dropped, so 5/2 renders as "2.5"
/// and 6 as "6". Locale independent.
std::string to_decimal_string(const Rational& value, unsigned digits);

/// Smallest integer >= value.
Integer ceil(const Rational& value);

}  // namespace pdiag
