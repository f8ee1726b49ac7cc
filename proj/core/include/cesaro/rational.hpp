#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cesaro {

/// Exact arbitrary-precision fraction. GMP keeps every value in lowest terms
/// with a positive denominator after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

namespace rational {

/// num/den in lowest terms. den must be nonzero.
Rational frac(const Integer& num, const Integer& den);

/// Parses "p/q", "p", or a finite decimal such as "-0.3" or "1.25e-2" into an
/// exact rational. Throws PreconditionError on malformed input or a zero
/// denominator.
Rational parse(std::string_view text);

/// Canonical fraction string: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Decimal rendering with 15 significant digits. Display only.
std::string to_decimal(const Rational& value, int significant_digits = 15);

double to_double(const Rational& value);

Rational abs(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// 2^exponent for exponent >= 0, or 1/2^-exponent otherwise.
Rational pow2(long exponent);

Rational pow(const Rational& base, unsigned long exponent);

Integer factorial(unsigned long n);

/// Smallest natural number strictly greater than value (>= 1).
Integer smallest_natural_above(const Rational& value);

}  // namespace rational
}  // namespace cesaro
