#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace nondeg {

// Exact rational over arbitrary-precision integers. GMP keeps every value
// produced by arithmetic in canonical form (gcd 1, positive denominator);
// parse_rational canonicalizes parsed input.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses `p/q` or an integer `p`. Anything else (decimals, exponents,
// zero denominators, stray characters) throws ParseError.
Rational parse_rational(std::string_view text);

// `p` when the denominator is 1, otherwise `p/q`.
std::string to_string(const Rational& value);

// Always `p/q`, even for integers.
std::string to_fraction_string(const Rational& value);

// Exact square root when value is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& value);

}  // namespace nondeg
