#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace prioclust {

/// Exact rational number, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Throws ParseError on anything else or q = 0.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// num/den in lowest terms. mpq_class(num, den) alone does not reduce, and
/// GMP arithmetic assumes reduced operands. Throws PreconditionError if den = 0.
Rational make_rational(long num, long den);

Rational power(const Rational& base, int exponent);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace prioclust
