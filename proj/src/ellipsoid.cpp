#include "simplexball/ellipsoid.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

namespace simplexball {

namespace {

template <Scalar T>
Matrix<T> scatter(const Simplex<T>& s, const Point<T>& c) {
  const auto n = static_cast<std::size_t>(s.dim());
  Matrix<T> m(n, n);
  for (const auto& v : s.vertices()) {
    Point<T> d = v - c;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) += d[i] * d[j];
    }
  }
  return m;
}

Eigen::MatrixXd to_eigen(const Matrix<double>& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  }
  return out;
}

Matrix<double> from_eigen(const Eigen::MatrixXd& m) {
  Matrix<double> out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  return out;
}

// Ellipsoid from rows D with shape = scale * (D^T D)^-1. With D = QR the
// factor W = sqrt(scale) R^-T avoids squaring the condition number of D.
Ellipsoid<double> factored_ellipsoid(Point<double> center, const Eigen::MatrixXd& rows, double scale) {
  const Eigen::Index n = rows.cols();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(rows);
  const Eigen::MatrixXd r = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(std::abs(r(i, i)) > 0.0) || !std::isfinite(r(i, i))) throw DegenerateSimplexError("matrix is not positive definite");
  }
  const Eigen::MatrixXd r_inv = r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(n, n));
  const Eigen::MatrixXd w = std::sqrt(scale) * r_inv.transpose();
  const Eigen::MatrixXd shape = w.transpose() * w;
  if (!shape.allFinite()) throw DegenerateSimplexError("matrix is not positive definite");
  return Ellipsoid<double>{std::move(center), from_eigen(0.5 * (shape + shape.transpose())), from_eigen(w)};
}

}  // namespace

double unit_ball_volume(int n) {
  const double half = 0.5 * n;
  return std::pow(std::numbers::pi, half) / std::tgamma(half + 1.0);
}

template <>
double Ellipsoid<double>::volume() const {
  if (factor) {
    // W is triangular: sqrt(det A) = |det W|.
    double root_det = 1.0;
    for (std::size_t i = 0; i < factor->rows(); ++i) root_det *= (*factor)(i, i);
    return unit_ball_volume(dim()) / std::abs(root_det);
  }
  Eigen::LLT<Eigen::MatrixXd> llt(to_eigen(shape));
  if (llt.info() != Eigen::Success) throw DegenerateSimplexError("ellipsoid shape is not positive definite");
  // sqrt(det A) = prod of Cholesky diagonal
  double root_det = 1.0;
  const Eigen::MatrixXd l = llt.matrixL();
  for (Eigen::Index i = 0; i < l.rows(); ++i) root_det *= l(i, i);
  return unit_ball_volume(dim()) / root_det;
}

template <>
double Ellipsoid<Rational>::volume() const {
  Rational det = determinant(shape);
  if (sgn(det) <= 0) throw DegenerateSimplexError("ellipsoid shape is not positive definite");
  return unit_ball_volume(dim()) / std::sqrt(det.get_d());
}

Ellipsoid<double> minimal_ellipsoid(const Simplex<double>& s) {
  const int n = s.dim();
  Point<double> c = centroid(s);
  Eigen::MatrixXd d(n + 1, n);
  for (int i = 0; i <= n; ++i) {
    for (int k = 0; k < n; ++k) d(i, k) = s.vertex(i)[static_cast<std::size_t>(k)] - c[static_cast<std::size_t>(k)];
  }
  return factored_ellipsoid(std::move(c), d, static_cast<double>(n + 1) / n);
}

Ellipsoid<Rational> minimal_ellipsoid(const Simplex<Rational>& s) {
  const int n = s.dim();
  Point<Rational> c = centroid(s);
  Matrix<Rational> m = scatter(s, c);
  const Rational factor = ratio(n, n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= factor;
  }
  return Ellipsoid<Rational>{std::move(c), inverse(std::move(m)), std::nullopt};
}

template <Scalar T>
T membership_margin(const Ellipsoid<T>& e, const Point<T>& x) {
  if (x.dim() != e.center.dim()) throw ArgumentError("point and ellipsoid dimensions differ");
  Point<T> d = x - e.center;
  if (e.factor) return norm_sq(*e.factor * d);
  return bilinear(e.shape, d, d);
}

QuadSurd membership_margin(const Ellipsoid<Rational>& e, const SurdPoint& x) {
  if (x.base.dim() != e.center.dim()) throw ArgumentError("point and ellipsoid dimensions differ");
  Point<Rational> b = x.base - e.center;
  Rational alpha = bilinear(e.shape, b, b) + x.radicand * bilinear(e.shape, x.coeff, x.coeff);
  Rational beta = 2 * bilinear(e.shape, b, x.coeff);
  return QuadSurd(std::move(alpha), std::move(beta), x.radicand);
}

template double membership_margin<double>(const Ellipsoid<double>&, const Point<double>&);
template Rational membership_margin<Rational>(const Ellipsoid<Rational>&, const Point<Rational>&);

MveeResult mvee(std::span<const Point<double>> points, const MveeOptions& options) {
  if (points.empty()) throw RankError("mvee of an empty point set");
  if (!(options.eps > 0.0)) throw ArgumentError("mvee eps must be positive");
  const auto n = static_cast<Eigen::Index>(points.front().dim());
  const auto count = static_cast<Eigen::Index>(points.size());
  if (n < 1) throw ArgumentError("mvee needs points of dimension >= 1");

  Eigen::MatrixXd p(n, count);
  for (Eigen::Index j = 0; j < count; ++j) {
    const auto& pt = points[static_cast<std::size_t>(j)];
    if (static_cast<Eigen::Index>(pt.dim()) != n) throw ArgumentError("mvee points differ in dimension");
    for (Eigen::Index i = 0; i < n; ++i) p(i, j) = pt[static_cast<std::size_t>(i)];
  }
  // Lift to (n+1) dimensions: q_j = (p_j, 1).
  Eigen::MatrixXd q(n + 1, count);
  q.topRows(n) = p;
  q.row(n).setOnes();

  Eigen::FullPivLU<Eigen::MatrixXd> lu(q);
  if (lu.rank() < n + 1) throw RankError("points do not affinely span the space");

  const double lifted = static_cast<double>(n + 1);
  Eigen::VectorXd u = Eigen::VectorXd::Constant(count, 1.0 / static_cast<double>(count));

  auto finish = [&](int iterations) {
    Eigen::VectorXd c = p * u;
    // shape = cov^-1 / n with cov = sum_j u_j (p_j - c)(p_j - c)^T.
    Eigen::MatrixXd rows = ((p.colwise() - c) * u.cwiseSqrt().asDiagonal()).transpose();
    Point<double> center(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) center[static_cast<std::size_t>(i)] = c(i);
    return MveeResult{factored_ellipsoid(std::move(center), rows, 1.0 / static_cast<double>(n)), iterations};
  };

  for (int iter = 0; iter <= options.max_iter; ++iter) {
    // M_j = q_j^T X^-1 q_j with X = Q U Q^T = R^T R, so M_j = ||R^-T q_j||^2.
    // Factoring sqrt(U) Q^T instead of X keeps M_j accurate on flat inputs.
    Eigen::HouseholderQR<Eigen::MatrixXd> qr((q * u.cwiseSqrt().asDiagonal()).transpose());
    const Eigen::MatrixXd r = qr.matrixQR().topRows(n + 1).triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i <= n; ++i) {
      if (!(std::abs(r(i, i)) > 0.0)) throw RankError("weighted moment matrix became singular");
    }
    const Eigen::MatrixXd solved = r.transpose().triangularView<Eigen::Lower>().solve(q);
    Eigen::VectorXd m = solved.colwise().squaredNorm().transpose();
    Eigen::Index j = 0;
    const double max_m = m.maxCoeff(&j);
    if ((max_m - lifted) / lifted <= options.eps) return finish(iter);
    if (iter == options.max_iter) break;
    // Smallest M among points that still carry weight; dropping weight there
    // (an away step) is what lets interior points leave the support quickly.
    Eigen::Index k = -1;
    for (Eigen::Index i = 0; i < count; ++i) {
      if (u(i) > 0.0 && (k < 0 || m(i) < m(k))) k = i;
    }
    const double toward = max_m / lifted - 1.0;
    const double away = 1.0 - m(k) / lifted;
    if (toward >= away || u(k) >= 1.0) {
      const double step = (max_m - lifted) / (lifted * (max_m - 1.0));
      u *= (1.0 - step);
      u(j) += step;
    } else {
      double step = (lifted - m(k)) / (lifted * (m(k) - 1.0));
      const double cap = u(k) / (1.0 - u(k));
      const bool drop = step >= cap;
      if (drop) step = cap;
      u *= (1.0 + step);
      u(k) = drop ? 0.0 : u(k) - step;
    }
  }
  throw ConvergenceError("mvee did not converge within max_iter", finish(options.max_iter));
}

}  // namespace simplexball
