#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace redchern {

// Exact rational number, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// num/den in lowest terms. The two-argument mpq_class constructor does not
// reduce, so use this instead of Rational(num, den). Throws on den == 0.
Rational make_rational(long num, long den);

// Parses "p" or "p/q". Rejects zero denominators and anything that is not an
// integer ratio.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string format_rational(const Rational& q);

Integer binomial(long n, long k);

}  // namespace redchern
