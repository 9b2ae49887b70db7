#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace moduli {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; construction from a raw pair goes through
// make_rational, which canonicalizes.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q". Throws RefusalError on anything else or q = 0.
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, unsigned exponent);

}  // namespace moduli
