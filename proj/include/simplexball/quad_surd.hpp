#pragma once

#include <compare>
#include <optional>
#include <string>

#include "simplexball/rational.hpp"

namespace simplexball {

/// Exact real number alpha + beta * sqrt(d) with rational alpha, beta and d > 0.
///
/// Values are only ever compared, never rounded: the sign of
/// alpha + beta*sqrt(d) - t is decided with one squaring. Arithmetic is
/// closed for operands that share the same radicand.
class QuadSurd {
 public:
  /// Zero (over radicand 1).
  QuadSurd() : alpha_(0), beta_(0), d_(1) {}
  QuadSurd(Rational alpha, Rational beta, Rational d);

  /// The rational value `value`, written over radicand `d`.
  static QuadSurd rational(Rational value, Rational d);

  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  const Rational& d() const { return d_; }

  /// True when the value is rational (beta == 0 or d a perfect square).
  bool is_rational() const;
  /// The exact value if it is rational.
  std::optional<Rational> rational_value() const;

  double to_double() const;
  /// Decimal expansion rounded to `digits` significant digits.
  std::string to_decimal(int digits = 17) const;

  QuadSurd operator-() const;
  QuadSurd& operator+=(const QuadSurd& rhs);
  QuadSurd& operator-=(const QuadSurd& rhs);
  QuadSurd& operator*=(const QuadSurd& rhs);
  QuadSurd& operator*=(const Rational& rhs);

  friend QuadSurd operator+(QuadSurd lhs, const QuadSurd& rhs) { return lhs += rhs; }
  friend QuadSurd operator-(QuadSurd lhs, const QuadSurd& rhs) { return lhs -= rhs; }
  friend QuadSurd operator*(QuadSurd lhs, const QuadSurd& rhs) { return lhs *= rhs; }
  friend QuadSurd operator*(QuadSurd lhs, const Rational& rhs) { return lhs *= rhs; }
  friend QuadSurd operator*(const Rational& lhs, QuadSurd rhs) { return rhs *= lhs; }

  /// Structural equality of (alpha, beta, d); use surd_cmp for value comparison.
  bool same_representation(const QuadSurd& other) const;

 private:
  void require_same_radicand(const QuadSurd& rhs) const;

  Rational alpha_;
  Rational beta_;
  Rational d_;
};

/// Exact ordering of q's value against the rational t.
std::strong_ordering surd_cmp(const QuadSurd& q, const Rational& t);

/// Exact ordering of two surds with a common radicand.
std::strong_ordering surd_cmp(const QuadSurd& lhs, const QuadSurd& rhs);

}  // namespace simplexball
