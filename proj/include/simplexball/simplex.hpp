#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "simplexball/linalg.hpp"

namespace simplexball {

/// Relative degeneracy threshold for float simplices:
/// |det(edges)| < kDegeneracyThreshold * (max edge length)^n is rejected.
inline constexpr double kDegeneracyThreshold = 1e-9;

/// |det(x_i - x_{n+1})| / n!  for n+1 points in n-space; zero iff degenerate.
template <Scalar T>
T simplex_volume_det(std::span<const Point<T>> vertices);

/// Nondegenerate simplex: n+1 vertices in n-space, n >= 1.
template <Scalar T>
class Simplex {
 public:
  /// Validates vertex count, coordinate count, finiteness and nondegeneracy.
  /// Throws ArgumentError on shape problems, DegenerateSimplexError otherwise.
  explicit Simplex(std::vector<Point<T>> vertices);

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const Point<T>& vertex(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }
  std::span<const Point<T>> vertices() const { return vertices_; }

  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  std::vector<Point<T>> vertices_;
};

/// Vertex index set J of a face, 0-based, strictly increasing.
/// The face dimension is |J| - 1.
class FaceIndex {
 public:
  FaceIndex(std::vector<int> indices, int vertex_count);

  /// Convenience for 1-based literals as used in reports: {1, 3} -> vertices 0 and 2.
  static FaceIndex from_one_based(std::vector<int> indices, int vertex_count);

  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }
  int dim() const { return size() - 1; }
  int vertex_count() const { return vertex_count_; }
  bool contains(int vertex) const;
  /// Vertices not in J, ascending.
  std::vector<int> complement() const;
  std::vector<int> one_based() const;
  /// "{1,2}" (1-based).
  std::string to_string() const;

  friend bool operator==(const FaceIndex&, const FaceIndex&) = default;
  friend auto operator<=>(const FaceIndex& a, const FaceIndex& b) { return a.indices_ <=> b.indices_; }

 private:
  std::vector<int> indices_;
  int vertex_count_;
};

/// A simplex given only by the Gram matrix of its vertices, <x_i, x_j>.
///
/// Everything the suitability predicate looks at is a bilinear form in the
/// vertices, so the Gram matrix is enough to decide it exactly. This also
/// admits simplices (the regular one, for most n) that have no rational
/// coordinates but do have a rational Gram matrix.
class GramSimplex {
 public:
  /// Requires a symmetric positive semidefinite (n+1)x(n+1) matrix of rank n
  /// whose edge vectors are independent.
  explicit GramSimplex(Matrix<Rational> gram);

  int dim() const { return static_cast<int>(gram_.rows()) - 1; }
  int vertex_count() const { return static_cast<int>(gram_.rows()); }
  const Rational& entry(int i, int j) const {
    return gram_(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  const Matrix<Rational>& matrix() const { return gram_; }

  /// <sum_i u_i x_i, sum_j w_j x_j>
  Rational form(std::span<const Rational> u, std::span<const Rational> w) const;

  bool inscribed() const;
  bool in_unit_ball() const;

 private:
  Matrix<Rational> gram_;
};

GramSimplex gram_of(const Simplex<Rational>& s);

/// Regular simplex inscribed in the unit ball, float coordinates.
Simplex<double> regular_inscribed_simplex(int n);
/// Gram matrix of the regular inscribed simplex: 1 on the diagonal, -1/n elsewhere.
GramSimplex regular_inscribed_gram(int n);

/// Exact copy of a float simplex (each double is read as the dyadic it is).
Simplex<Rational> exact_copy(const Simplex<double>& s);

/// Exact copy, additionally scaled by a rational factor slightly below one
/// if any vertex ended up marginally outside the closed unit ball.
Simplex<Rational> exact_copy_in_ball(const Simplex<double>& s);

template <Scalar T>
Point<T> centroid(const Simplex<T>& s);

/// Centroid of the vertices listed in `indices`.
template <Scalar T>
Point<T> centroid_of(const Simplex<T>& s, std::span<const int> indices);

template <Scalar T>
Matrix<T> edge_matrix(std::span<const Point<T>> vertices);

/// Largest vertex norm squared.
template <Scalar T>
T max_vertex_norm_sq(const Simplex<T>& s);

}  // namespace simplexball

#include <variant>

namespace simplexball {

/// A simplex whose arithmetic mode is only known at run time (e.g. parsed input).
using AnySimplex = std::variant<Simplex<double>, Simplex<Rational>>;

}  // namespace simplexball
