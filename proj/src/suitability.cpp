#include "simplexball/suitability.hpp"

#include <cmath>

#include "simplexball/format.hpp"

namespace simplexball {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

namespace {

Rational binom_q(int n, int k) { return Rational(mpz_class(static_cast<unsigned long>(binomial(n, k)))); }

void check_dim(int n, int dim, int lo, int hi) {
  if (dim < lo || dim > hi) {
    throw ArgumentError("face dimension " + std::to_string(dim) + " outside [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "] for n = " + std::to_string(n));
  }
}

void check_vertex(int vertex_count, int vertex) {
  if (vertex < 0 || vertex >= vertex_count) throw ArgumentError("vertex index out of range");
}

void require_in_ball(const Simplex<double>& s) {
  if (max_vertex_norm_sq(s) > 1.0 + kSuitableTolerance) throw ArgumentError("simplex is not contained in the unit ball");
}
void require_in_ball(const GramSimplex& s) {
  if (!s.in_unit_ball()) throw ArgumentError("simplex is not contained in the unit ball");
}

void require_inscribed(const Simplex<double>& s) {
  for (const auto& v : s.vertices()) {
    if (std::abs(norm_sq(v) - 1.0) > kSuitableTolerance) throw ArgumentError("simplex is not inscribed in the unit sphere");
  }
}
void require_inscribed(const GramSimplex& s) {
  if (!s.inscribed()) throw ArgumentError("simplex is not inscribed in the unit sphere");
}

template <class Predicate>
std::vector<FaceIndex> collect_faces(int vertex_count, int size, Predicate&& suitable) {
  std::vector<FaceIndex> out;
  for_each_face(vertex_count, size, [&](const FaceIndex& f) {
    if (suitable(f)) out.push_back(f);
    return true;
  });
  return out;
}

template <class Predicate>
std::optional<FaceIndex> first_superset(const FaceIndex& base, int size, Predicate&& suitable) {
  std::optional<FaceIndex> found;
  for_each_superset(base, size, [&](const FaceIndex& f) {
    if (suitable(f)) {
      found = f;
      return false;
    }
    return true;
  });
  return found;
}

CriticalFinding make_finding(std::string check, int dim, std::optional<int> vertex, const Simplex<Rational>* exact,
                             std::string detail) {
  CriticalFinding f;
  f.check = std::move(check);
  f.dim = dim;
  f.vertex = vertex;
  if (exact != nullptr) f.vertices = exact_vertex_strings(*exact);
  f.exact_confirmed = true;
  f.detail = std::move(detail);
  return f;
}

CriticalFinding make_finding(std::string check, int dim, std::optional<int> vertex, const GramSimplex&,
                             std::string detail) {
  return make_finding(std::move(check), dim, vertex, nullptr, std::move(detail));
}

}  // namespace

std::vector<std::vector<std::string>> exact_vertex_strings(const Simplex<Rational>& s) {
  std::vector<std::vector<std::string>> out;
  for (const auto& v : s.vertices()) {
    std::vector<std::string> row;
    for (const auto& x : v.coords()) row.push_back(to_string(x));
    out.push_back(std::move(row));
  }
  return out;
}

TheoremViolation::TheoremViolation(CriticalFinding finding)
    : std::runtime_error("theorem violation (" + finding.check + ", dim " + std::to_string(finding.dim) +
                         "): " + finding.detail),
      finding_(std::move(finding)) {}

// --- find_suitable_vertex ---------------------------------------------------

int find_suitable_vertex(const Simplex<double>& s) {
  require_in_ball(s);
  const Point<double> c = centroid(s);
  for (int j = 0; j < s.vertex_count(); ++j) {
    // ||y||^2 - ||x_j||^2 = 4 <c, c - x_j>
    if (dot(c, c - s.vertex(j)) <= kSuitableTolerance / 4) return j;
  }
  throw InvariantViolation("no vertex satisfies <c, c - x_j> <= 0");
}

int find_suitable_vertex(const GramSimplex& s) {
  require_in_ball(s);
  const std::vector<Rational> c = centroid_weights(s.vertex_count());
  const Rational cc = s.form(c, c);
  for (int j = 0; j < s.vertex_count(); ++j) {
    std::vector<Rational> e(c.size(), Rational(0));
    e[static_cast<std::size_t>(j)] = 1;
    if (cc - s.form(c, e) <= 0) return j;
  }
  throw InvariantViolation("no vertex satisfies <c, c - x_j> <= 0");
}

int find_suitable_vertex(const Simplex<Rational>& s) { return find_suitable_vertex(gram_of(s)); }

// --- suitable_faces ---------------------------------------------------------

std::vector<FaceIndex> suitable_faces(const GramSimplex& s, int dim) {
  const int n = s.dim();
  check_dim(n, dim, 0, n - 1);
  require_in_ball(s);
  return collect_faces(s.vertex_count(), dim + 1, [&](const FaceIndex& f) { return is_suitable(s, f); });
}

std::vector<FaceIndex> suitable_faces(const Simplex<Rational>& s, int dim) {
  return suitable_faces(gram_of(s), dim);
}

std::vector<FaceIndex> suitable_faces(const Simplex<double>& s, int dim, double tolerance) {
  const int n = s.dim();
  check_dim(n, dim, 0, n - 1);
  require_in_ball(s);
  auto faces =
      collect_faces(s.vertex_count(), dim + 1, [&](const FaceIndex& f) { return is_suitable(s, f, tolerance); });
  if (!faces.empty()) return faces;
  const Simplex<Rational> exact = exact_copy_in_ball(s);
  faces = suitable_faces(exact, dim);
  if (faces.empty()) {
    throw TheoremViolation(make_finding("theorem1", dim, std::nullopt, &exact, "no suitable face in exact arithmetic"));
  }
  return faces;
}

// --- extend_suitable_face ---------------------------------------------------

FaceIndex extend_suitable_face(const GramSimplex& s, int vertex, int dim) {
  const int n = s.dim();
  check_vertex(s.vertex_count(), vertex);
  check_dim(n, dim, 1, n - 1);
  require_in_ball(s);
  const FaceIndex base({vertex}, s.vertex_count());
  if (!is_suitable(s, base)) throw ArgumentError("vertex " + std::to_string(vertex + 1) + " is not suitable");
  if (auto f = first_superset(base, dim + 1, [&](const FaceIndex& g) { return is_suitable(s, g); })) return *f;
  throw TheoremViolation(make_finding("theorem2", dim, vertex, s, "no suitable extension in exact arithmetic"));
}

FaceIndex extend_suitable_face(const Simplex<Rational>& s, int vertex, int dim) {
  try {
    return extend_suitable_face(gram_of(s), vertex, dim);
  } catch (const TheoremViolation& v) {
    CriticalFinding f = v.finding();
    f.vertices = exact_vertex_strings(s);
    throw TheoremViolation(std::move(f));
  }
}

FaceIndex extend_suitable_face(const Simplex<double>& s, int vertex, int dim, double tolerance) {
  const int n = s.dim();
  check_vertex(s.vertex_count(), vertex);
  check_dim(n, dim, 1, n - 1);
  require_in_ball(s);
  const FaceIndex base({vertex}, s.vertex_count());
  if (!is_suitable(s, base, tolerance)) {
    throw ArgumentError("vertex " + std::to_string(vertex + 1) + " is not suitable");
  }
  if (auto f = first_superset(base, dim + 1, [&](const FaceIndex& g) { return is_suitable(s, g, tolerance); })) {
    return *f;
  }
  const Simplex<Rational> exact = exact_copy_in_ball(s);
  if (!is_suitable(exact, base)) {
    throw ArgumentError("vertex " + std::to_string(vertex + 1) + " is not suitable in exact arithmetic");
  }
  return extend_suitable_face(exact, vertex, dim);
}

// --- vertex_condition -------------------------------------------------------

namespace {

// (sum over pairs avoiding v, sum of <x_v, x_j>) from a Gram accessor.
template <class T, class Gram>
std::pair<T, T> vertex_condition_sums(int vertex_count, int vertex, Gram&& gram) {
  T pairs(0);
  T star(0);
  for (int i = 0; i < vertex_count; ++i) {
    if (i == vertex) continue;
    star += gram(vertex, i);
    for (int j = i + 1; j < vertex_count; ++j) {
      if (j != vertex) pairs += gram(i, j);
    }
  }
  return {pairs, star};
}

}  // namespace

bool vertex_condition(const Simplex<double>& s, int vertex, double tolerance) {
  check_vertex(s.vertex_count(), vertex);
  require_inscribed(s);
  const int n = s.dim();
  auto [pairs, star] = vertex_condition_sums<double>(
      s.vertex_count(), vertex, [&](int i, int j) { return dot(s.vertex(i), s.vertex(j)); });
  // ||y_v||^2 - 1 = 8/(n+1)^2 * (pairs - (n-1)/2 * star), so scale the tolerance alike.
  const double slack = tolerance * (n + 1) * (n + 1) / 8.0;
  return pairs - 0.5 * (n - 1) * star <= slack;
}

bool vertex_condition(const GramSimplex& s, int vertex) {
  check_vertex(s.vertex_count(), vertex);
  require_inscribed(s);
  const int n = s.dim();
  auto [pairs, star] =
      vertex_condition_sums<Rational>(s.vertex_count(), vertex, [&](int i, int j) { return s.entry(i, j); });
  return pairs <= ratio(n - 1, 2) * star;
}

bool vertex_condition(const Simplex<Rational>& s, int vertex) { return vertex_condition(gram_of(s), vertex); }

// --- sum_bound_check --------------------------------------------------------

SumBound<double> sum_bound_check(const Simplex<double>& s, int vertex, int dim) {
  const int n = s.dim();
  check_vertex(s.vertex_count(), vertex);
  check_dim(n, dim, 1, n - 1);
  require_inscribed(s);
  const FaceIndex base({vertex}, s.vertex_count());
  if (!is_suitable(s, base)) throw ArgumentError("vertex " + std::to_string(vertex + 1) + " is not suitable");
  SumBound<double> out{0.0, binom_q(n, dim), false};
  for_each_superset(base, dim + 1, [&](const FaceIndex& f) {
    out.sum += y_norm_sq(s, f);
    return true;
  });
  out.holds = out.sum <= out.bound.get_d() + 1e-9;
  return out;
}

SumBound<QuadSurd> sum_bound_check(const GramSimplex& s, int vertex, int dim) {
  const int n = s.dim();
  check_vertex(s.vertex_count(), vertex);
  check_dim(n, dim, 1, n - 1);
  require_inscribed(s);
  const FaceIndex base({vertex}, s.vertex_count());
  if (!is_suitable(s, base)) throw ArgumentError("vertex " + std::to_string(vertex + 1) + " is not suitable");
  SumBound<QuadSurd> out{QuadSurd::rational(0, face_ratios(n, dim + 1).rho_sq), binom_q(n, dim), false};
  for_each_superset(base, dim + 1, [&](const FaceIndex& f) {
    out.sum += y_norm_sq_surd(s, f);
    return true;
  });
  out.holds = surd_cmp(out.sum, out.bound) != std::strong_ordering::greater;
  return out;
}

SumBound<QuadSurd> sum_bound_check(const Simplex<Rational>& s, int vertex, int dim) {
  return sum_bound_check(gram_of(s), vertex, dim);
}

// --- coefficient formulas ---------------------------------------------------

CoeffPair coeffs_ab(int n, int m) {
  if (n < 2 || m < 1 || m > n - 1) {
    throw ArgumentError("coeffs_ab needs n >= 2 and 1 <= m <= n-1 (got n=" + std::to_string(n) +
                        ", m=" + std::to_string(m) + ")");
  }
  const Rational radicand = ratio((m + 1) * n, n - m);
  const QuadSurd one = QuadSurd::rational(1, radicand);
  const QuadSurd rho(0, 1, radicand);
  const QuadSurd one_plus = one + rho;

  // Unsimplified bracket forms.
  const QuadSurd bracket = binom_q(n, m) * one_plus * one_plus -
                           Rational(2) * rho * one_plus * binom_q(n - 1, m - 1) * ratio(n + 1, m + 1);
  QuadSurd a_expanded = ratio(2, (n + 1) * (n + 1)) * bracket;
  if (n != 2) a_expanded += ratio(2, (m + 1) * (m + 1)) * binom_q(n - 2, m - 2) * (rho * rho);
  QuadSurd b_expanded =
      -(ratio(2, (n + 1) * (n + 1)) * bracket) +
      Rational(2) * rho * one_plus * Rational((binom_q(n, m) - binom_q(n - 1, m - 1)) / Rational((m + 1) * (n + 1))) -
      ratio(2, (m + 1) * (m + 1)) * binom_q(n - 1, m - 1) * (rho * rho);

  // Simplified forms.
  const int numerator = 2 * m * m + n * n - 3 * m * n + m - n;
  if (numerator != (n - m) * (n - 2 * m - 1)) throw InvariantViolation("numerator factorization mismatch");
  const Rational lead = binom_q(n, m) / Rational((n + 1) * (n + 1) * (m + 1));
  const QuadSurd a = Rational(4) * lead *
                     (ratio(n - m, n) * rho + QuadSurd::rational(ratio(numerator, (n - m) * (n - 1)), radicand));
  const QuadSurd b =
      Rational(2) * lead *
      (ratio((n - m) * (n - 1), n) * rho + QuadSurd::rational(ratio(numerator, n - m), radicand));

  if (!a.same_representation(a_expanded) || !b.same_representation(b_expanded)) {
    throw InvariantViolation("coefficient routes disagree for n=" + std::to_string(n) + ", m=" + std::to_string(m));
  }
  return CoeffPair{n, m, a, b, std::move(a_expanded), std::move(b_expanded)};
}

CoefficientIdentity coefficient_identity(int n, int m) {
  const FaceRatios ratios = face_ratios(n, m);
  const QuadSurd one = QuadSurd::rational(1, ratios.rho_sq);
  const QuadSurd rho(0, 1, ratios.rho_sq);
  const QuadSurd one_plus = one + rho;
  const QuadSurd q = ratio(1, n + 1) * (one_plus * one_plus) -
                     ratio(2, n + 1) * (rho * one_plus) + ratio(1, m) * (rho * rho);
  if (sgn(q.beta()) != 0) throw InvariantViolation("coefficient sum has an irrational part");
  return CoefficientIdentity{n, m, q.alpha()};
}

// --- certified verdicts -----------------------------------------------------

CertifiedSuitability::CertifiedSuitability(const Simplex<double>& s, double near_eps)
    : simplex_(s), near_eps_(near_eps), centroid_(centroid(s)) {}

double CertifiedSuitability::norm_sq(const FaceIndex& face) const { return y_norm_sq(simplex_, face); }

const Simplex<Rational>& CertifiedSuitability::exact_coordinates() {
  if (!exact_coords_) exact_coords_ = exact_copy_in_ball(simplex_);
  return *exact_coords_;
}

const GramSimplex& CertifiedSuitability::exact() {
  if (!exact_) exact_ = gram_of(exact_coordinates());
  return *exact_;
}

bool CertifiedSuitability::exact_suitable(const FaceIndex& face) {
  auto it = exact_cache_.find(face.indices());
  if (it != exact_cache_.end()) return it->second;
  const bool verdict = is_suitable(exact(), face);
  exact_cache_.emplace(face.indices(), verdict);
  return verdict;
}

bool CertifiedSuitability::suitable(const FaceIndex& face) {
  const double ns = norm_sq(face);
  if (std::abs(ns - 1.0) > near_eps_) return ns < 1.0;
  ++escalations_;
  return exact_suitable(face);
}

TheoremCheck check_theorem1(const Simplex<double>& s, double near_eps) {
  TheoremCheck out;
  CertifiedSuitability oracle(s, near_eps);
  const int n = s.dim();
  for (int dim = 0; dim <= n - 1; ++dim) {
    bool found = false;
    for_each_face(s.vertex_count(), dim + 1, [&](const FaceIndex& f) {
      ++out.faces_checked;
      found = oracle.suitable(f);
      return !found;
    });
    if (found) continue;
    // Float says none: decide every face exactly before reporting.
    bool exact_found = false;
    for_each_face(s.vertex_count(), dim + 1, [&](const FaceIndex& f) {
      exact_found = oracle.exact_suitable(f);
      return !exact_found;
    });
    if (!exact_found) {
      out.violations.push_back(make_finding("theorem1", dim, std::nullopt, &oracle.exact_coordinates(),
                                            "no suitable face of this dimension"));
    }
  }
  out.escalations = oracle.escalations();
  return out;
}

TheoremCheck check_theorem2(const Simplex<double>& s, double near_eps) {
  TheoremCheck out;
  CertifiedSuitability oracle(s, near_eps);
  const int n = s.dim();
  const int first = find_suitable_vertex(s);
  if (!oracle.suitable(FaceIndex({first}, s.vertex_count())) &&
      !oracle.exact_suitable(FaceIndex({first}, s.vertex_count()))) {
    out.violations.push_back(make_finding("find_suitable_vertex", 0, first, &oracle.exact_coordinates(),
                                          "returned vertex is not suitable"));
  }
  for (int v = 0; v < s.vertex_count(); ++v) {
    const FaceIndex base({v}, s.vertex_count());
    if (!oracle.suitable(base)) continue;
    for (int dim = 1; dim <= n - 1; ++dim) {
      bool found = false;
      for_each_superset(base, dim + 1, [&](const FaceIndex& f) {
        ++out.faces_checked;
        found = oracle.suitable(f);
        return !found;
      });
      if (found) continue;
      if (!oracle.exact_suitable(base)) continue;
      bool exact_found = false;
      for_each_superset(base, dim + 1, [&](const FaceIndex& f) {
        exact_found = oracle.exact_suitable(f);
        return !exact_found;
      });
      if (!exact_found) {
        out.violations.push_back(make_finding("theorem2", dim, v, &oracle.exact_coordinates(),
                                              "suitable vertex has no suitable extension"));
      }
    }
  }
  out.escalations = oracle.escalations();
  return out;
}

// --- reports ----------------------------------------------------------------

namespace {

FaceEntry float_entry(const Simplex<double>& s, const FaceIndex& f) {
  return FaceEntry{f, format_double(y_norm_sq(s, f)), std::nullopt, std::nullopt};
}

FaceEntry exact_entry(const GramSimplex& s, const FaceIndex& f) {
  QuadSurd q = y_norm_sq_surd(s, f);
  FaceEntry e{f, q.to_decimal(17), std::nullopt, q};
  if (auto r = q.rational_value()) e.norm_sq_rational = to_string(*r);
  return e;
}

}  // namespace

SuitabilityReport build_suitability_report(const AnySimplex& any, std::optional<int> dim) {
  SuitabilityReport report;
  std::visit(
      [&](const auto& s) {
        const int n = s.dim();
        report.n = n;
        if (dim) check_dim(n, *dim, 0, n - 1);
        const int lo = dim.value_or(0);
        const int hi = dim.value_or(n - 1);
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Simplex<double>>) {
          report.mode = "float";
          for (int d = lo; d <= hi; ++d) {
            DimensionEntry entry{d, {}};
            for_each_face(s.vertex_count(), d + 1, [&](const FaceIndex& f) {
              if (is_suitable(s, f)) entry.faces.push_back(float_entry(s, f));
              return true;
            });
            report.dimensions.push_back(std::move(entry));
          }
          if (max_vertex_norm_sq(s) <= 1.0 + kSuitableTolerance) {
            report.theorem1_holds = check_theorem1(s).violations.empty();
            report.theorem2_holds = check_theorem2(s).violations.empty();
          }
        } else {
          report.mode = "exact";
          const GramSimplex gram = gram_of(s);
          for (int d = lo; d <= hi; ++d) {
            DimensionEntry entry{d, {}};
            for_each_face(s.vertex_count(), d + 1, [&](const FaceIndex& f) {
              if (is_suitable(gram, f)) entry.faces.push_back(exact_entry(gram, f));
              return true;
            });
            report.dimensions.push_back(std::move(entry));
          }
          if (gram.in_unit_ball()) {
            bool t1 = true;
            for (int d = 0; d <= n - 1 && t1; ++d) t1 = !suitable_faces(gram, d).empty();
            bool t2 = true;
            for (int v = 0; v < gram.vertex_count() && t2; ++v) {
              if (!is_suitable(gram, FaceIndex({v}, gram.vertex_count()))) continue;
              for (int d = 1; d <= n - 1 && t2; ++d) {
                try {
                  extend_suitable_face(gram, v, d);
                } catch (const TheoremViolation&) {
                  t2 = false;
                }
              }
            }
            report.theorem1_holds = t1;
            report.theorem2_holds = t2;
          }
        }
      },
      any);
  return report;
}

}  // namespace simplexball
