#include "simplexball/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace simplexball {

namespace {

template <Scalar T>
void check_shape(std::span<const Point<T>> vertices) {
  if (vertices.size() < 2) throw ArgumentError("a simplex needs at least 2 vertices");
  const std::size_t n = vertices.size() - 1;
  for (const auto& v : vertices) {
    if (v.dim() != n) {
      throw ArgumentError("simplex with " + std::to_string(vertices.size()) + " vertices needs " +
                          std::to_string(n) + " coordinates per vertex, got " + std::to_string(v.dim()));
    }
    if constexpr (std::is_same_v<T, double>) {
      for (double x : v.coords()) {
        if (!std::isfinite(x)) throw ArgumentError("non-finite vertex coordinate");
      }
    }
  }
}

template <Scalar T>
T factorial(std::size_t n) {
  T f(1);
  for (std::size_t k = 2; k <= n; ++k) f *= T(static_cast<double>(k));
  return f;
}

// Pivoted LDL^T on a symmetric rational matrix. Returns the rank, or -1 if
// the matrix is not positive semidefinite.
int psd_rank(Matrix<Rational> a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;
  int rank = 0;
  while (!live.empty()) {
    auto best = std::max_element(live.begin(), live.end(),
                                 [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
    const std::size_t p = *best;
    if (sgn(a(p, p)) < 0) return -1;
    if (sgn(a(p, p)) == 0) {
      // Zero diagonal on a PSD remainder forces the whole remainder to vanish.
      for (std::size_t i : live) {
        for (std::size_t j : live) {
          if (sgn(a(i, j)) != 0) return -1;
        }
      }
      return rank;
    }
    live.erase(best);
    for (std::size_t i : live) {
      Rational f = a(i, p) / a(p, p);
      for (std::size_t j : live) a(i, j) -= f * a(p, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

template <Scalar T>
Matrix<T> edge_matrix(std::span<const Point<T>> vertices) {
  check_shape(vertices);
  const std::size_t n = vertices.size() - 1;
  Matrix<T> e(n, n);
  const Point<T>& last = vertices[n];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) e(i, k) = vertices[i][k] - last[k];
  }
  return e;
}

template <Scalar T>
T simplex_volume_det(std::span<const Point<T>> vertices) {
  Matrix<T> e = edge_matrix(vertices);
  T det = determinant(std::move(e));
  if (det < 0) det = -det;
  return T(det / factorial<T>(vertices.size() - 1));
}

template <Scalar T>
Simplex<T>::Simplex(std::vector<Point<T>> vertices) : vertices_(std::move(vertices)) {
  std::span<const Point<T>> view(vertices_);
  Matrix<T> e = edge_matrix(view);
  const std::size_t n = e.rows();
  T det = determinant(e);
  if constexpr (std::is_same_v<T, double>) {
    double max_edge = 0.0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
        max_edge = std::max(max_edge, std::sqrt(norm_sq(vertices_[i] - vertices_[j])));
      }
    }
    if (!(std::abs(det) >= kDegeneracyThreshold * std::pow(max_edge, static_cast<double>(n))) ||
        max_edge == 0.0) {
      throw DegenerateSimplexError("degenerate simplex (|det| below threshold)");
    }
  } else {
    if (sgn(det) == 0) throw DegenerateSimplexError("degenerate simplex (det = 0)");
  }
}

FaceIndex::FaceIndex(std::vector<int> indices, int vertex_count)
    : indices_(std::move(indices)), vertex_count_(vertex_count) {
  if (indices_.empty() || static_cast<int>(indices_.size()) > vertex_count_) {
    throw ArgumentError("face index set must have between 1 and n+1 elements");
  }
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 0 || indices_[i] >= vertex_count_) throw ArgumentError("face index out of range");
    if (i > 0 && indices_[i] <= indices_[i - 1]) {
      throw ArgumentError("face indices must be strictly increasing");
    }
  }
}

FaceIndex FaceIndex::from_one_based(std::vector<int> indices, int vertex_count) {
  for (int& i : indices) --i;
  return FaceIndex(std::move(indices), vertex_count);
}

bool FaceIndex::contains(int vertex) const {
  return std::binary_search(indices_.begin(), indices_.end(), vertex);
}

std::vector<int> FaceIndex::complement() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(vertex_count_) - indices_.size());
  for (int v = 0; v < vertex_count_; ++v) {
    if (!contains(v)) out.push_back(v);
  }
  return out;
}

std::vector<int> FaceIndex::one_based() const {
  std::vector<int> out(indices_);
  for (int& i : out) ++i;
  return out;
}

std::string FaceIndex::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) os << ',';
    os << indices_[i] + 1;
  }
  os << '}';
  return os.str();
}

GramSimplex::GramSimplex(Matrix<Rational> gram) : gram_(std::move(gram)) {
  const std::size_t size = gram_.rows();
  if (size < 2 || gram_.cols() != size) throw ArgumentError("Gram matrix must be square of size >= 2");
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      if (gram_(i, j) != gram_(j, i)) throw ArgumentError("Gram matrix must be symmetric");
    }
  }
  const int rank = psd_rank(gram_);
  if (rank < 0) throw ArgumentError("Gram matrix is not positive semidefinite");
  // Rank n+1 would need n+1 dimensions; rank < n is caught by the edge test below.
  if (rank > static_cast<int>(size) - 1) throw ArgumentError("Gram matrix rank exceeds n");
  // Edge Gram matrix <x_i - x_last, x_j - x_last> must be nonsingular.
  const std::size_t n = size - 1;
  Matrix<Rational> edge(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      edge(i, j) = gram_(i, j) - gram_(i, n) - gram_(j, n) + gram_(n, n);
    }
  }
  if (sgn(determinant(std::move(edge))) == 0) throw DegenerateSimplexError("degenerate simplex (Gram)");
}

Rational GramSimplex::form(std::span<const Rational> u, std::span<const Rational> w) const {
  const std::size_t size = gram_.rows();
  if (u.size() != size || w.size() != size) throw ArgumentError("weight vector size mismatch");
  Rational sum(0);
  for (std::size_t i = 0; i < size; ++i) {
    if (sgn(u[i]) == 0) continue;
    Rational row(0);
    for (std::size_t j = 0; j < size; ++j) {
      if (sgn(w[j]) != 0) row += gram_(i, j) * w[j];
    }
    sum += u[i] * row;
  }
  return sum;
}

bool GramSimplex::inscribed() const {
  for (std::size_t i = 0; i < gram_.rows(); ++i) {
    if (gram_(i, i) != 1) return false;
  }
  return true;
}

bool GramSimplex::in_unit_ball() const {
  for (std::size_t i = 0; i < gram_.rows(); ++i) {
    if (gram_(i, i) > 1) return false;
  }
  return true;
}

GramSimplex gram_of(const Simplex<Rational>& s) {
  const auto size = static_cast<std::size_t>(s.vertex_count());
  Matrix<Rational> g(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i; j < size; ++j) {
      g(i, j) = dot(s.vertex(static_cast<int>(i)), s.vertex(static_cast<int>(j)));
      g(j, i) = g(i, j);
    }
  }
  return GramSimplex(std::move(g));
}

Simplex<double> regular_inscribed_simplex(int n) {
  if (n < 1) throw ArgumentError("dimension must be >= 1");
  const auto size = static_cast<std::size_t>(n) + 1;
  // Centered basis vectors e_i - 1/(n+1) live in the hyperplane orthogonal to
  // (1,...,1); a Householder reflection maps that hyperplane onto R^n x {0}.
  std::vector<double> w(size, 1.0 / std::sqrt(static_cast<double>(size)));
  w[size - 1] -= 1.0;
  double ww = 0.0;
  for (double x : w) ww += x * x;

  std::vector<Point<double>> vertices;
  vertices.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    std::vector<double> v(size, -1.0 / static_cast<double>(size));
    v[i] += 1.0;
    double wv = 0.0;
    for (std::size_t k = 0; k < size; ++k) wv += w[k] * v[k];
    for (std::size_t k = 0; k < size; ++k) v[k] -= 2.0 * w[k] * wv / ww;
    v.pop_back();
    Point<double> p(std::move(v));
    p *= 1.0 / std::sqrt(norm_sq(p));
    vertices.push_back(std::move(p));
  }
  return Simplex<double>(std::move(vertices));
}

GramSimplex regular_inscribed_gram(int n) {
  if (n < 1) throw ArgumentError("dimension must be >= 1");
  const auto size = static_cast<std::size_t>(n) + 1;
  Matrix<Rational> g(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) g(i, j) = i == j ? Rational(1) : ratio(-1, n);
  }
  return GramSimplex(std::move(g));
}

Simplex<Rational> exact_copy(const Simplex<double>& s) {
  std::vector<Point<Rational>> vertices;
  vertices.reserve(static_cast<std::size_t>(s.vertex_count()));
  for (const auto& v : s.vertices()) {
    Point<Rational> p(v.dim());
    for (std::size_t k = 0; k < v.dim(); ++k) p[k] = exact_from_double(v[k]);
    vertices.push_back(std::move(p));
  }
  return Simplex<Rational>(std::move(vertices));
}

Simplex<Rational> exact_copy_in_ball(const Simplex<double>& s) {
  Simplex<Rational> exact = exact_copy(s);
  Rational worst = max_vertex_norm_sq(exact);
  if (worst <= 1) return exact;
  // Shrink by lambda = 1 - 2^-k with k decreasing until lambda^2 * worst <= 1.
  Rational lambda;
  for (int k = 52; k >= 1; --k) {
    mpz_class pow2 = mpz_class(1) << static_cast<mp_bitcnt_t>(k);
    lambda = ratio(pow2 - 1, pow2);
    if (lambda * lambda * worst <= 1) break;
  }
  if (lambda * lambda * worst > 1) throw ArgumentError("simplex lies well outside the unit ball");
  std::vector<Point<Rational>> scaled(exact.vertices().begin(), exact.vertices().end());
  for (auto& v : scaled) v *= lambda;
  return Simplex<Rational>(std::move(scaled));
}

template <Scalar T>
Point<T> centroid(const Simplex<T>& s) {
  Point<T> c(static_cast<std::size_t>(s.dim()));
  for (const auto& v : s.vertices()) c += v;
  c *= T(1) / T(s.vertex_count());
  return c;
}

template <Scalar T>
Point<T> centroid_of(const Simplex<T>& s, std::span<const int> indices) {
  if (indices.empty()) throw ArgumentError("centroid of an empty vertex set");
  Point<T> c(static_cast<std::size_t>(s.dim()));
  for (int i : indices) c += s.vertex(i);
  c *= T(1) / T(static_cast<int>(indices.size()));
  return c;
}

template <Scalar T>
T max_vertex_norm_sq(const Simplex<T>& s) {
  T worst(0);
  for (const auto& v : s.vertices()) {
    T ns = norm_sq(v);
    if (ns > worst) worst = ns;
  }
  return worst;
}

template class Simplex<double>;
template class Simplex<Rational>;
template double simplex_volume_det<double>(std::span<const Point<double>>);
template Rational simplex_volume_det<Rational>(std::span<const Point<Rational>>);
template Matrix<double> edge_matrix<double>(std::span<const Point<double>>);
template Matrix<Rational> edge_matrix<Rational>(std::span<const Point<Rational>>);
template Point<double> centroid<double>(const Simplex<double>&);
template Point<Rational> centroid<Rational>(const Simplex<Rational>&);
template Point<double> centroid_of<double>(const Simplex<double>&, std::span<const int>);
template Point<Rational> centroid_of<Rational>(const Simplex<Rational>&, std::span<const int>);
template double max_vertex_norm_sq<double>(const Simplex<double>&);
template Rational max_vertex_norm_sq<Rational>(const Simplex<Rational>&);

}  // namespace simplexball
