#ifndef WREATH_RATIONAL_HPP
#define WREATH_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace wreath {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" in lowest terms; denominators of 1 are dropped.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q"; throws ParseError otherwise or on q = 0.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned long n);

/// Binomial coefficient for any integer top (negative tops follow the
/// usual polynomial extension).
Integer binomial(const Integer& top, unsigned long k);
Integer binomial(long top, unsigned long k);

Integer power(long base, unsigned long exponent);

/// top * (top-1) * ... * (top-k+1).
Integer falling_factorial(long top, unsigned long k);

/// num / den in lowest terms; throws PreconditionError on a zero denominator.
Rational ratio(const Integer& num, const Integer& den);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

} // namespace wreath

#endif // WREATH_RATIONAL_HPP
