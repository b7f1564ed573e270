#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace simplexball {

/// Arbitrary-precision rational; always kept in canonical form.
using Rational = mpq_class;

/// num/den in canonical form. Prefer this over mpq_class(num, den), which
/// does not canonicalize.
Rational ratio(long num, long den);
Rational ratio(const mpz_class& num, const mpz_class& den);

/// Parses "p/q", "p" or a plain decimal like "-0.25". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" for integers).
std::string to_string(const Rational& value);

/// Exact binary-to-rational conversion; every finite double is a dyadic rational.
Rational exact_from_double(double value);

double to_double(const Rational& value);

/// The nonnegative rational square root of `value`, if it has one.
std::optional<Rational> rational_sqrt(const Rational& value);

}  // namespace simplexball
