#pragma once

#include <compare>

namespace simplexball {

/// psi(t) = 2 sqrt(n)/(n+1) * sqrt(t (n+1-t)) + |1 - 2t/(n+1)|, 0 <= t <= n+1.
double psi(int n, double t);

/// a_n = floor((n+1)/2 - sqrt(n+1)/2), computed with integer arithmetic only.
long floor_a(int n);

/// Minimal norm of a linear interpolation projector on the n-ball,
/// theta_n = max(psi(a_n), psi(a_n + 1)), and the maximizer k_n.
struct ProjectorNorm {
  int n = 0;
  long a_n = 0;
  double psi_at_a = 0.0;
  double psi_at_a_plus_1 = 0.0;
  double theta = 0.0;
  long k_n = 0;
  /// psi(a_n) and psi(a_n + 1) agree to 1e-12; k_n is then a_n.
  bool tie = false;
};

ProjectorNorm projector_norm(int n);

/// Exact comparisons on theta_n for integer arguments. psi at an integer t is
/// (sqrt(4 n t (n+1-t)) + |n+1-2t|) / (n+1), so all of these reduce to signs of
/// sums of square roots of integers.
std::strong_ordering compare_theta_with_sqrt_n(int n);
std::strong_ordering compare_theta_with_sqrt_n_plus_1(int n);
/// Ordering of psi(a_n) against psi(a_n + 1).
std::strong_ordering compare_psi_candidates(int n);

}  // namespace simplexball
