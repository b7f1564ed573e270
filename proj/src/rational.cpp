#include "simplexball/rational.hpp"

#include <cmath>

#include "simplexball/errors.hpp"

namespace simplexball {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw ParseError("not an integer: '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational ratio(long num, long den) { return ratio(mpz_class(num), mpz_class(den)); }

Rational ratio(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ArgumentError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    // Finite decimal: integer part and fraction digits, read exactly.
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      int_part.remove_prefix(1);
    }
    if (int_part.empty() && frac.empty()) throw ParseError("bad decimal literal");
    std::string digits = std::string(int_part.empty() ? "0" : int_part) + std::string(frac);
    mpz_class num = parse_integer(digits);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational q(negative ? mpz_class(-num) : num, den);
    q.canonicalize();
    return q;
  }

  return Rational(parse_integer(text));
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational exact_from_double(double value) {
  if (!std::isfinite(value)) throw ArgumentError("cannot rationalize a non-finite value");
  Rational q;
  mpq_set_d(q.get_mpq_t(), value);
  return q;
}

double to_double(const Rational& value) { return value.get_d(); }

std::optional<Rational> rational_sqrt(const Rational& value) {
  if (sgn(value) < 0) return std::nullopt;
  const mpz_class& num = value.get_num();
  const mpz_class& den = value.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  Rational root(sqrt(num), sqrt(den));
  root.canonicalize();
  return root;
}

}  // namespace simplexball
