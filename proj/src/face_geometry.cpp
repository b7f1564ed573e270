#include "simplexball/face_geometry.hpp"

#include <cmath>

namespace simplexball {

namespace {

void check_face(int n, const FaceIndex& face) {
  if (face.vertex_count() != n + 1) throw ArgumentError("face index built for a different simplex");
  if (face.size() > n) throw ArgumentError("face must leave a nonempty opposite face (|J| <= n)");
}

}  // namespace

FaceRatios face_ratios(int n, int m) {
  if (n < 1 || m < 1 || m > n) {
    throw ArgumentError("face_ratios needs 1 <= m <= n (got n=" + std::to_string(n) +
                        ", m=" + std::to_string(m) + ")");
  }
  FaceRatios out;
  out.n = n;
  out.m = m;
  out.rho_sq = ratio(m * n, n - m + 1);
  out.r = std::sqrt(static_cast<double>(n - m + 1) / (static_cast<double>(m) * n));
  out.rho = std::sqrt(static_cast<double>(m) * n / static_cast<double>(n - m + 1));
  if (m < n) {
    out.rho_prime_sq = ratio((m + 1) * n, n - m);
    out.r_prime = std::sqrt(static_cast<double>(n - m) / (static_cast<double>(m + 1) * n));
    out.rho_prime = std::sqrt(static_cast<double>(m + 1) * n / static_cast<double>(n - m));
  }
  return out;
}

std::optional<Point<Rational>> SurdPoint::rational() const {
  auto root = rational_sqrt(radicand);
  if (!root) return std::nullopt;
  return base + *root * coeff;
}

Point<double> SurdPoint::approx() const {
  const double s = std::sqrt(radicand.get_d());
  Point<double> p(base.dim());
  for (std::size_t k = 0; k < base.dim(); ++k) p[k] = base[k].get_d() + s * coeff[k].get_d();
  return p;
}

FaceGeometry<double> face_geometry(const Simplex<double>& s, const FaceIndex& face) {
  const int n = s.dim();
  check_face(n, face);
  FaceGeometry<double> fg;
  fg.ratios = face_ratios(n, face.size());
  fg.c = centroid(s);
  fg.g = centroid_of(s, std::span<const int>(face.indices()));
  std::vector<int> rest = face.complement();
  fg.h = centroid_of(s, std::span<const int>(rest));
  const double rho = fg.ratios.rho;
  fg.y = (1.0 + rho) * fg.c - rho * fg.g;
  return fg;
}

FaceGeometry<Rational> face_geometry(const Simplex<Rational>& s, const FaceIndex& face) {
  const int n = s.dim();
  check_face(n, face);
  FaceGeometry<Rational> fg;
  fg.ratios = face_ratios(n, face.size());
  fg.c = centroid(s);
  fg.g = centroid_of(s, std::span<const int>(face.indices()));
  std::vector<int> rest = face.complement();
  fg.h = centroid_of(s, std::span<const int>(rest));
  Point<Rational> dir = fg.c - fg.g;
  if (norm_sq(dir) == 0) throw InvariantViolation("face centroid coincides with the simplex centroid");
  fg.y = SurdPoint{fg.c, std::move(dir), fg.ratios.rho_sq};
  return fg;
}

double y_norm_sq(const Simplex<double>& s, const FaceIndex& face) {
  return norm_sq(face_geometry(s, face).y);
}

QuadSurd y_norm_sq_surd(const Simplex<Rational>& s, const FaceIndex& face) {
  const int n = s.dim();
  check_face(n, face);
  const Rational rho_sq = face_ratios(n, face.size()).rho_sq;
  Point<Rational> c = centroid(s);
  Point<Rational> cg = c - centroid_of(s, std::span<const int>(face.indices()));
  Rational alpha = norm_sq(c) + rho_sq * norm_sq(cg);
  Rational beta = 2 * dot(c, cg);
  return QuadSurd(std::move(alpha), std::move(beta), rho_sq);
}

std::vector<Rational> centroid_weights(int vertex_count) {
  return std::vector<Rational>(static_cast<std::size_t>(vertex_count), ratio(1, vertex_count));
}

std::vector<Rational> face_weights(const FaceIndex& face) {
  std::vector<Rational> w(static_cast<std::size_t>(face.vertex_count()), Rational(0));
  for (int i : face.indices()) w[static_cast<std::size_t>(i)] = ratio(1, face.size());
  return w;
}

QuadSurd y_norm_sq_surd(const GramSimplex& s, const FaceIndex& face) {
  const int n = s.dim();
  check_face(n, face);
  const Rational rho_sq = face_ratios(n, face.size()).rho_sq;
  std::vector<Rational> c = centroid_weights(s.vertex_count());
  std::vector<Rational> cg = face_weights(face);
  for (std::size_t i = 0; i < cg.size(); ++i) cg[i] = c[i] - cg[i];
  Rational alpha = s.form(c, c) + rho_sq * s.form(cg, cg);
  Rational beta = 2 * s.form(c, cg);
  return QuadSurd(std::move(alpha), std::move(beta), rho_sq);
}

QuadSurd y_norm_sq_surd(const AnySimplex& s, const FaceIndex& face) {
  if (const auto* exact = std::get_if<Simplex<Rational>>(&s)) return y_norm_sq_surd(*exact, face);
  throw ModeError("y_norm_sq_surd requires rational coordinates");
}

bool is_suitable(const Simplex<double>& s, const FaceIndex& face, double tolerance) {
  return y_norm_sq(s, face) <= 1.0 + tolerance;
}

bool is_suitable(const Simplex<Rational>& s, const FaceIndex& face) {
  return surd_cmp(y_norm_sq_surd(s, face), Rational(1)) != std::strong_ordering::greater;
}

bool is_suitable(const GramSimplex& s, const FaceIndex& face) {
  return surd_cmp(y_norm_sq_surd(s, face), Rational(1)) != std::strong_ordering::greater;
}

}  // namespace simplexball
