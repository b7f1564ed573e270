#include "simplexball/projector_norms.hpp"

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "simplexball/errors.hpp"

namespace simplexball {

namespace {

// sqrt(root) + offset, with root >= 0.
struct RootPlusInt {
  mpz_class root;
  mpz_class offset;
};

int sign(const mpz_class& x) { return sgn(x); }

// sign(sqrt(p) - sqrt(q))
int sign_root_diff(const mpz_class& p, const mpz_class& q) { return sign(mpz_class(p - q)); }

// sign of (sqrt(p1) + o1) - (sqrt(p2) + o2)
int compare_values(const RootPlusInt& x, const RootPlusInt& y) {
  const mpz_class delta = x.offset - y.offset;
  const int s_roots = sign_root_diff(x.root, y.root);
  const int s_delta = sign(delta);
  if (s_roots == 0) return s_delta;
  if (s_delta == 0 || s_roots == s_delta) return s_roots;
  // Opposite signs: compare |sqrt(p1) - sqrt(p2)| with |delta|.
  // (sqrt(p1) - sqrt(p2))^2 = p1 + p2 - 2 sqrt(p1 p2)
  const mpz_class sum = x.root + y.root;
  const mpz_class prod = x.root * y.root;
  const mpz_class d2 = delta * delta;
  // sign(p1 + p2 - d2 - 2 sqrt(p1 p2)) = sign(|roots|^2 - delta^2)
  const mpz_class lhs = sum - d2;
  int mag;  // sign(lhs - sqrt(4 prod))
  if (lhs < 0) {
    mag = -1;
  } else {
    mag = sign(mpz_class(lhs * lhs - 4 * prod));
  }
  if (mag == 0) return 0;
  return mag > 0 ? s_roots : s_delta;
}

std::strong_ordering to_ordering(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// (n+1) * psi(t) for integer t.
RootPlusInt scaled_psi(long n, long t) {
  const long s = n + 1;
  mpz_class root = mpz_class(4) * n * t * (s - t);
  long abs_term = s - 2 * t;
  if (abs_term < 0) abs_term = -abs_term;
  return RootPlusInt{root, mpz_class(abs_term)};
}

RootPlusInt scaled_theta(int n) {
  const long a = floor_a(n);
  RootPlusInt lo = scaled_psi(n, a);
  RootPlusInt hi = scaled_psi(n, a + 1);
  return compare_values(lo, hi) >= 0 ? lo : hi;
}

void check_n(int n) {
  if (n < 1) throw ArgumentError("projector norms need n >= 1");
}

}  // namespace

double psi(int n, double t) {
  check_n(n);
  const double s = n + 1.0;
  if (!(t >= 0.0 && t <= s)) throw ArgumentError("psi argument t outside [0, n+1]");
  // (sqrt(4 n t (s - t)) + |s - 2t|) / s: exact at integer t whenever the radicand is a square.
  return (std::sqrt(4.0 * n * t * (s - t)) + std::abs(s - 2.0 * t)) / s;
}

long floor_a(int n) {
  check_n(n);
  // Largest integer a with a <= (s - sqrt(s))/2, i.e. s - 2a >= sqrt(s) >= 0.
  const long s = n + 1L;
  auto fits = [s](long a) {
    const long k = s - 2 * a;
    return k >= 0 && k * k >= s;
  };
  long a = static_cast<long>(std::floor((s - std::sqrt(static_cast<double>(s))) / 2.0));
  while (!fits(a)) --a;
  while (fits(a + 1)) ++a;
  return a;
}

ProjectorNorm projector_norm(int n) {
  check_n(n);
  ProjectorNorm out;
  out.n = n;
  out.a_n = floor_a(n);
  out.psi_at_a = psi(n, static_cast<double>(out.a_n));
  out.psi_at_a_plus_1 = psi(n, static_cast<double>(out.a_n + 1));
  out.theta = std::max(out.psi_at_a, out.psi_at_a_plus_1);
  out.tie = std::abs(out.psi_at_a - out.psi_at_a_plus_1) <= 1e-12;
  out.k_n = (out.tie || out.psi_at_a > out.psi_at_a_plus_1) ? out.a_n : out.a_n + 1;
  return out;
}

std::strong_ordering compare_theta_with_sqrt_n(int n) {
  check_n(n);
  const long s = n + 1;
  // (n+1) sqrt(n) = sqrt(n (n+1)^2)
  return to_ordering(compare_values(scaled_theta(n), RootPlusInt{mpz_class(n) * s * s, 0}));
}

std::strong_ordering compare_theta_with_sqrt_n_plus_1(int n) {
  check_n(n);
  const long s = n + 1;
  return to_ordering(compare_values(scaled_theta(n), RootPlusInt{mpz_class(s) * s * s, 0}));
}

std::strong_ordering compare_psi_candidates(int n) {
  check_n(n);
  const long a = floor_a(n);
  return to_ordering(compare_values(scaled_psi(n, a), scaled_psi(n, a + 1)));
}

}  // namespace simplexball
