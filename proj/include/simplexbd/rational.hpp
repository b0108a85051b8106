#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sbd {

// mpq_class keeps values canonical (lowest terms, positive denominator)
// as long as every construction goes through make_rational / parse_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// "p/q" in lowest terms, q omitted when 1.
std::string to_string(const Rational& r);

// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view s);

Rational rdiv(const Rational& a, const Rational& b);

}  // namespace sbd
