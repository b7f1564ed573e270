#pragma once

#include <optional>
#include <span>

#include "simplexball/face_geometry.hpp"
#include "simplexball/simplex.hpp"

namespace simplexball {

/// {x : (x - center)^T shape (x - center) <= 1} with shape symmetric positive definite.
template <Scalar T>
struct Ellipsoid {
  Point<T> center;
  Matrix<T> shape;
  /// Optional W with shape = W^T W. Float margins and volumes use it when
  /// present, which stays accurate for ill-conditioned shapes. Code that edits
  /// `shape` must update or reset it.
  std::optional<Matrix<T>> factor;

  int dim() const { return static_cast<int>(center.dim()); }
  /// vol(B_n) / sqrt(det shape).
  double volume() const;
};

template <>
double Ellipsoid<double>::volume() const;
template <>
double Ellipsoid<Rational>::volume() const;

/// Volume of the n-dimensional unit ball.
double unit_ball_volume(int n);

/// Minimal-volume ellipsoid containing the simplex: centered at the centroid,
/// shape = [ n/(n+1) * sum_i (x_i - c)(x_i - c)^T ]^{-1}. Every vertex sits on
/// the boundary. Float mode factors with Cholesky; failure is degeneracy.
Ellipsoid<double> minimal_ellipsoid(const Simplex<double>& s);
Ellipsoid<Rational> minimal_ellipsoid(const Simplex<Rational>& s);

/// (x - c)^T A (x - c); <= 1 means inside or on the boundary.
template <Scalar T>
T membership_margin(const Ellipsoid<T>& e, const Point<T>& x);

/// Exact margin of a point with surd coordinates (e.g. y_J of a rational simplex).
QuadSurd membership_margin(const Ellipsoid<Rational>& e, const SurdPoint& x);

struct MveeOptions {
  double eps = 1e-7;
  int max_iter = 100000;
};

struct MveeResult {
  Ellipsoid<double> ellipsoid;
  int iterations = 0;
};

/// Input points do not affinely span their space.
class RankError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iteration budget exhausted; carries the last iterate.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, MveeResult last)
      : std::runtime_error(what), last_(std::move(last)) {}
  const MveeResult& last() const { return last_; }

 private:
  MveeResult last_;
};

/// Khachiyan's barycentric coordinate ascent for the minimum-volume enclosing
/// ellipsoid of a point set, with Todd-Yildirim away steps. Starts from uniform
/// weights and stops once the largest lifted Mahalanobis value exceeds n+1 by
/// at most a factor eps.
MveeResult mvee(std::span<const Point<double>> points, const MveeOptions& options = {});

}  // namespace simplexball
