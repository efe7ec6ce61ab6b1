#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace invop {

/// Exact rational; GMP keeps it canonical (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view s);

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

}  // namespace invop
