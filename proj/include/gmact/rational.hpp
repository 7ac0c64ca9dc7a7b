#pragma once
#include <gmpxx.h>
#include <string>

namespace gmact {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical rational from numerator/denominator (gcd reduced, denominator > 0).
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p", "p/q". Throws input_error on malformed text or zero denominator.
Rational rational_from_string(const std::string& text);

/// "p" or "p/q", in lowest terms.
std::string to_string(const Rational& q);

/// Exact power; negative exponents require a nonzero base.
Rational rational_pow(const Rational& base, long exp);

} // namespace gmact
