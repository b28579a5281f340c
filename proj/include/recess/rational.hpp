#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace recess {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p/q", "p", or a decimal literal such as "-1.25e-3" exactly.
/// Throws Error(InvalidInput) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" encoding (always with a denominator, even when it is 1).
std::string to_fraction_string(const Rational& q);

/// Human-readable decimal: the integer itself, or the shortest double that
/// round-trips.
std::string to_decimal_string(const Rational& q);
std::string to_decimal_string(double v);

double to_double(const Rational& q);
Rational from_double(double v);

int sign(const Rational& q);
Rational abs(const Rational& q);

/// Exact square root when both numerator and denominator are perfect squares.
std::optional<Rational> exact_sqrt(const Rational& q);

// Rational bounds lo <= sqrt(q) <= hi with absolute gap 10^-digits. Both are
// the exact root when one exists.
Rational sqrt_lower(const Rational& q, unsigned digits = 40);
Rational sqrt_upper(const Rational& q, unsigned digits = 40);

/// Nearest rational with the given denominator (ties away from zero).
Rational round_to_denominator(const Rational& q, const Integer& denominator);

}  // namespace recess
