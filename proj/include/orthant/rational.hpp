#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orthant {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q" into a canonical rational. Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Exact square root when numerator and denominator are both perfect squares.
std::optional<Rational> exact_sqrt(const Rational& value);

Rational pow(const Rational& base, long exponent);

inline double to_double(const Rational& value) { return value.get_d(); }
inline double to_double(const Integer& value) { return value.get_d(); }
inline double to_double(double value) { return value; }

/// Natural log of |value| without overflowing through double; -inf for zero.
double log_abs(const Integer& value);
double log_abs(const Rational& value);
double log_abs(double value);

std::vector<double> to_double(std::span<const Rational> values);

/// Best rational approximation with denominator at most max_denominator
/// (continued fractions). Used to snap floating grid points to rationals.
Rational approximate_rational(double value, long max_denominator);

}  // namespace orthant
