#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <type_traits>
#include <utility>
#include <vector>

#include "simplexball/errors.hpp"
#include "simplexball/rational.hpp"

namespace simplexball {

/// Scalars used across one computation: IEEE double or exact Rational.
template <class T>
concept Scalar = std::is_same_v<T, double> || std::is_same_v<T, Rational>;

/// A point (or vector) in n-space with coordinates of scalar type T.
template <Scalar T>
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim) : coords_(dim, T(0)) {}
  explicit Point(std::vector<T> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<T> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  const T& operator[](std::size_t i) const { return coords_[i]; }
  T& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<T>& coords() const { return coords_; }

  Point& operator+=(const Point& rhs) {
    require_same_dim(rhs);
    for (std::size_t i = 0; i < dim(); ++i) coords_[i] += rhs.coords_[i];
    return *this;
  }
  Point& operator-=(const Point& rhs) {
    require_same_dim(rhs);
    for (std::size_t i = 0; i < dim(); ++i) coords_[i] -= rhs.coords_[i];
    return *this;
  }
  Point& operator*=(const T& s) {
    for (auto& x : coords_) x *= s;
    return *this;
  }

  friend Point operator+(Point lhs, const Point& rhs) { return lhs += rhs; }
  friend Point operator-(Point lhs, const Point& rhs) { return lhs -= rhs; }
  friend Point operator*(Point lhs, const T& s) { return lhs *= s; }
  friend Point operator*(const T& s, Point rhs) { return rhs *= s; }
  friend bool operator==(const Point& lhs, const Point& rhs) { return lhs.coords_ == rhs.coords_; }

 private:
  void require_same_dim(const Point& rhs) const {
    if (rhs.dim() != dim()) throw ArgumentError("point dimension mismatch");
  }

  std::vector<T> coords_;
};

template <Scalar T>
T dot(const Point<T>& a, const Point<T>& b) {
  if (a.dim() != b.dim()) throw ArgumentError("point dimension mismatch");
  T sum(0);
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a[i] * b[i];
  return sum;
}

template <Scalar T>
T norm_sq(const Point<T>& a) {
  return dot(a, a);
}

/// Dense row-major matrix; only the handful of operations the geometry needs.
template <Scalar T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Point<T> operator*(const Point<T>& x) const {
    if (x.dim() != cols_) throw ArgumentError("matrix/vector dimension mismatch");
    Point<T> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      T sum(0);
      for (std::size_t c = 0; c < cols_; ++c) sum += (*this)(r, c) * x[c];
      y[r] = sum;
    }
    return y;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

namespace detail {

// Row index of the pivot for column `col` among rows [col, n): largest
// magnitude in floating point, first nonzero in exact arithmetic.
template <Scalar T>
std::size_t choose_pivot(const Matrix<T>& a, std::size_t col) {
  std::size_t best = col;
  if constexpr (std::is_same_v<T, double>) {
    for (std::size_t r = col + 1; r < a.rows(); ++r) {
      if (std::abs(a(r, col)) > std::abs(a(best, col))) best = r;
    }
  } else {
    while (best < a.rows() && sgn(a(best, col)) == 0) ++best;
    if (best == a.rows()) best = col;
  }
  return best;
}

template <Scalar T>
bool is_zero(const T& x) {
  if constexpr (std::is_same_v<T, double>) {
    return x == 0.0;
  } else {
    return sgn(x) == 0;
  }
}

}  // namespace detail

/// Determinant by Gaussian elimination (exact for Rational).
template <Scalar T>
T determinant(Matrix<T> a) {
  if (a.rows() != a.cols()) throw ArgumentError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = detail::choose_pivot(a, col);
    if (detail::is_zero(a(piv, col))) return T(0);
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (detail::is_zero(a(r, col))) continue;
      T f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

/// Gauss-Jordan inverse. Throws DegenerateSimplexError when singular.
template <Scalar T>
Matrix<T> inverse(Matrix<T> a) {
  if (a.rows() != a.cols()) throw ArgumentError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = detail::choose_pivot(a, col);
    if (detail::is_zero(a(piv, col))) throw DegenerateSimplexError("singular matrix");
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(piv, c), a(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    }
    T p = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || detail::is_zero(a(r, col))) continue;
      T f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

/// x^T A y
template <Scalar T>
T bilinear(const Matrix<T>& a, const Point<T>& x, const Point<T>& y) {
  return dot(x, a * y);
}

}  // namespace simplexball
