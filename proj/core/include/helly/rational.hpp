#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace helly {

// All geometry and all bound comparisons run on exact rationals. mpq_class
// keeps values canonical (reduced, denominator > 0), so equality is plain
// component comparison.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or "p" with optional sign. Throws MalformedInputError on
// garbage or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

Integer floor_rational(const Rational& value);

Rational pow_rational(const Rational& base, unsigned exponent);

// The exact n-th root when the rational is a perfect n-th power, nullopt
// otherwise. Never approximates.
std::optional<Rational> exact_nth_root(const Rational& value, unsigned n);

// Certified rational enclosure of value^(1/n) for value >= 0: lower bound
// rounded down and upper bound rounded up at denominator 10^digits. Used only
// for display; verdicts always go through integer-power comparisons.
Rational nth_root_lower(const Rational& value, unsigned n, unsigned digits = 12);
Rational nth_root_upper(const Rational& value, unsigned n, unsigned digits = 12);

Integer binomial(unsigned n, unsigned k);

}  // namespace helly
