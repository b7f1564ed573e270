#include "simplexball/quad_surd.hpp"

#include <cmath>
#include <cstdio>

#include "simplexball/errors.hpp"

namespace simplexball {

namespace {

std::strong_ordering sign_of(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// Sign of a + b*sqrt(d), d > 0.
int surd_sign(const Rational& a, const Rational& b, const Rational& d) {
  const int sa = sgn(a);
  const int sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against b^2 d.
  Rational a2 = a * a;
  Rational b2d = b * b * d;
  int mag = cmp(a2, b2d);
  return mag == 0 ? 0 : (mag > 0 ? sa : sb);
}

}  // namespace

QuadSurd::QuadSurd(Rational alpha, Rational beta, Rational d)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), d_(std::move(d)) {
  alpha_.canonicalize();
  beta_.canonicalize();
  d_.canonicalize();
  if (sgn(d_) <= 0) throw ArgumentError("QuadSurd radicand must be positive");
}

QuadSurd QuadSurd::rational(Rational value, Rational d) {
  return QuadSurd(std::move(value), Rational(0), std::move(d));
}

bool QuadSurd::is_rational() const { return rational_value().has_value(); }

std::optional<Rational> QuadSurd::rational_value() const {
  if (sgn(beta_) == 0) return alpha_;
  if (auto root = rational_sqrt(d_)) return Rational(alpha_ + beta_ * *root);
  return std::nullopt;
}

double QuadSurd::to_double() const {
  return alpha_.get_d() + beta_.get_d() * std::sqrt(d_.get_d());
}

std::string QuadSurd::to_decimal(int digits) const {
  // 256 bits is far beyond the 17 digits we print.
  const mp_bitcnt_t prec = 256;
  mpf_class a(alpha_, prec);
  mpf_class b(beta_, prec);
  mpf_class d(d_, prec);
  mpf_class v(a + b * sqrt(d), prec);
  if (v == 0) return "0";
  mp_exp_t exp = 0;
  std::string mant = v.get_str(exp, 10, static_cast<std::size_t>(digits));
  bool negative = !mant.empty() && mant.front() == '-';
  if (negative) mant.erase(0, 1);
  // mant is d1 d2 ... with value 0.d1d2... * 10^exp.
  std::string out = negative ? "-" : "";
  if (exp > 0 && exp <= 21) {
    if (static_cast<std::size_t>(exp) >= mant.size()) {
      out += mant + std::string(static_cast<std::size_t>(exp) - mant.size(), '0');
    } else {
      out += mant.substr(0, static_cast<std::size_t>(exp)) + "." + mant.substr(static_cast<std::size_t>(exp));
    }
  } else if (exp <= 0 && exp > -6) {
    out += "0." + std::string(static_cast<std::size_t>(-exp), '0') + mant;
  } else {
    out += mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(exp - 1);
  }
  return out;
}

QuadSurd QuadSurd::operator-() const { return QuadSurd(-alpha_, -beta_, d_); }

void QuadSurd::require_same_radicand(const QuadSurd& rhs) const {
  if (d_ != rhs.d_) throw ArgumentError("QuadSurd arithmetic needs a common radicand");
}

QuadSurd& QuadSurd::operator+=(const QuadSurd& rhs) {
  require_same_radicand(rhs);
  alpha_ += rhs.alpha_;
  beta_ += rhs.beta_;
  return *this;
}

QuadSurd& QuadSurd::operator-=(const QuadSurd& rhs) {
  require_same_radicand(rhs);
  alpha_ -= rhs.alpha_;
  beta_ -= rhs.beta_;
  return *this;
}

QuadSurd& QuadSurd::operator*=(const QuadSurd& rhs) {
  require_same_radicand(rhs);
  Rational a = alpha_ * rhs.alpha_ + beta_ * rhs.beta_ * d_;
  Rational b = alpha_ * rhs.beta_ + beta_ * rhs.alpha_;
  alpha_ = std::move(a);
  beta_ = std::move(b);
  return *this;
}

QuadSurd& QuadSurd::operator*=(const Rational& rhs) {
  alpha_ *= rhs;
  beta_ *= rhs;
  return *this;
}

bool QuadSurd::same_representation(const QuadSurd& other) const {
  return alpha_ == other.alpha_ && beta_ == other.beta_ && d_ == other.d_;
}

std::strong_ordering surd_cmp(const QuadSurd& q, const Rational& t) {
  return sign_of(surd_sign(Rational(q.alpha() - t), q.beta(), q.d()));
}

std::strong_ordering surd_cmp(const QuadSurd& lhs, const QuadSurd& rhs) {
  QuadSurd diff = lhs - rhs;
  return sign_of(surd_sign(diff.alpha(), diff.beta(), diff.d()));
}

}  // namespace simplexball
