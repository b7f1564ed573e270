#pragma once

#include <optional>

#include "simplexball/quad_surd.hpp"
#include "simplexball/simplex.hpp"

namespace simplexball {

/// Float mode counts ||y||^2 <= 1 + kSuitableTolerance as suitable.
inline constexpr double kSuitableTolerance = 1e-9;

/// Ratios attached to a face with m = |J| vertices of an n-simplex.
///
/// r is the distance from the centroid of a regular inscribed simplex to the
/// centroid of such a face, rho = 1/r. The primed pair is the same quantity
/// for faces with m + 1 vertices and is absent when m = n.
struct FaceRatios {
  int n = 0;
  int m = 0;
  double r = 0.0;
  double rho = 0.0;
  std::optional<double> r_prime;
  std::optional<double> rho_prime;
  Rational rho_sq;                       // mn / (n - m + 1)
  std::optional<Rational> rho_prime_sq;  // (m + 1) n / (n - m)
};

FaceRatios face_ratios(int n, int m);

/// base + sqrt(radicand) * coeff, coordinatewise.
struct SurdPoint {
  Point<Rational> base;
  Point<Rational> coeff;
  Rational radicand;

  /// Exact coordinates when the radicand is a rational square.
  std::optional<Point<Rational>> rational() const;
  Point<double> approx() const;
};

template <Scalar T>
struct BoundaryPointType {
  using type = Point<T>;
};
template <>
struct BoundaryPointType<Rational> {
  using type = SurdPoint;
};

/// Centroids and the boundary point y of the minimal ellipsoid on the ray
/// from the face centroid g through the opposite-face centroid h.
template <Scalar T>
struct FaceGeometry {
  Point<T> g;
  Point<T> h;
  Point<T> c;
  FaceRatios ratios;
  typename BoundaryPointType<T>::type y;
};

FaceGeometry<double> face_geometry(const Simplex<double>& s, const FaceIndex& face);
FaceGeometry<Rational> face_geometry(const Simplex<Rational>& s, const FaceIndex& face);

/// ||y_J||^2 in float arithmetic.
double y_norm_sq(const Simplex<double>& s, const FaceIndex& face);

/// ||y_J||^2 = alpha + beta sqrt(d) with alpha = ||c||^2 + rho^2 ||c-g||^2,
/// beta = 2 <c, c-g>, d = rho^2.
QuadSurd y_norm_sq_surd(const Simplex<Rational>& s, const FaceIndex& face);
QuadSurd y_norm_sq_surd(const GramSimplex& s, const FaceIndex& face);
/// Throws ModeError for a float simplex.
QuadSurd y_norm_sq_surd(const AnySimplex& s, const FaceIndex& face);

/// ||y_J|| <= 1, boundary inclusive.
bool is_suitable(const Simplex<double>& s, const FaceIndex& face, double tolerance = kSuitableTolerance);
bool is_suitable(const Simplex<Rational>& s, const FaceIndex& face);
bool is_suitable(const GramSimplex& s, const FaceIndex& face);

/// Barycentric weights of the simplex centroid and of the centroid of `face`.
std::vector<Rational> centroid_weights(int vertex_count);
std::vector<Rational> face_weights(const FaceIndex& face);

}  // namespace simplexball
