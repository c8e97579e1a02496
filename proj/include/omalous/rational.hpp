#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace omalous {

/// Arbitrary-precision rational. All class coefficients live here; nothing
/// in the library touches floating point.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

bool is_integer(const Rational& q);

/// Throws std::domain_error if q is not an integer or does not fit in a long.
long to_long(const Rational& q);

/// "7", "-3/2".
std::string to_string(const Rational& q);

/// Parses "7", "-3/2". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// Binomial coefficient C(n, k) for n >= 0; zero outside 0 <= k <= n.
mpz_class binomial(long n, long k);

}  // namespace omalous
