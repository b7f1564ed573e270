#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "simplexball/combinations.hpp"
#include "simplexball/face_geometry.hpp"
#include "simplexball/quad_surd.hpp"
#include "simplexball/simplex.hpp"

namespace simplexball {

/// Float results with |‖y‖^2 - 1| at or below this are rechecked exactly.
inline constexpr double kNearBoundaryEps = 1e-6;

// ---------------------------------------------------------------------------
// Existence of suitable vertices and faces

/// Smallest vertex j with <c, c - x_j> <= 0. Such a vertex is always suitable
/// since ||2c - x_j||^2 = 4<c, c - x_j> + ||x_j||^2. Requires s inside the unit
/// ball. Throws InvariantViolation if no vertex qualifies.
int find_suitable_vertex(const Simplex<double>& s);
int find_suitable_vertex(const Simplex<Rational>& s);
int find_suitable_vertex(const GramSimplex& s);

/// Every suitable face of dimension `dim` (|J| = dim + 1), lexicographic.
///
/// The float overload never returns an empty list: an empty float result is
/// recomputed exactly, and an empty exact result throws TheoremViolation.
std::vector<FaceIndex> suitable_faces(const Simplex<double>& s, int dim, double tolerance = kSuitableTolerance);
std::vector<FaceIndex> suitable_faces(const Simplex<Rational>& s, int dim);
std::vector<FaceIndex> suitable_faces(const GramSimplex& s, int dim);

/// Lexicographically first suitable face of dimension `dim` containing the
/// suitable vertex `vertex`. Throws ArgumentError if `vertex` is not suitable
/// and TheoremViolation if no extension exists (float: after exact recheck).
FaceIndex extend_suitable_face(const Simplex<double>& s, int vertex, int dim,
                               double tolerance = kSuitableTolerance);
FaceIndex extend_suitable_face(const Simplex<Rational>& s, int vertex, int dim);
FaceIndex extend_suitable_face(const GramSimplex& s, int vertex, int dim);

// ---------------------------------------------------------------------------
// Inscribed-simplex machinery

/// sum_{i<j; i,j != v} <x_i, x_j>  <=  (n-1)/2 * sum_{j != v} <x_v, x_j>.
/// For inscribed simplices this is equivalent to vertex v being suitable.
/// Throws ArgumentError if the simplex is not inscribed.
bool vertex_condition(const Simplex<double>& s, int vertex, double tolerance = kSuitableTolerance);
bool vertex_condition(const Simplex<Rational>& s, int vertex);
bool vertex_condition(const GramSimplex& s, int vertex);

/// Sum of ||y_J'||^2 over all faces J' with dim + 1 vertices containing v,
/// against the count C(n, dim) of such faces.
template <class Value>
struct SumBound {
  Value sum;
  Rational bound;
  bool holds = false;
};

SumBound<double> sum_bound_check(const Simplex<double>& s, int vertex, int dim);
SumBound<QuadSurd> sum_bound_check(const GramSimplex& s, int vertex, int dim);
SumBound<QuadSurd> sum_bound_check(const Simplex<Rational>& s, int vertex, int dim);

/// Coefficients a, b of the two groups of scalar products in the sum above:
/// sum ||y_J'||^2 - C(n, m) = a * sum_{i<j; i,j != v} <x_i,x_j> - b * sum_{j != v} <x_v,x_j>
/// with m = dim. Both are u + v * rho' over the radicand rho'^2 = (m+1)n/(n-m).
struct CoeffPair {
  int n = 0;
  int m = 0;
  QuadSurd a;
  QuadSurd b;
  /// Same quantities evaluated from the unsimplified bracket expressions.
  QuadSurd a_expanded;
  QuadSurd b_expanded;

  double a_value() const { return a.to_double(); }
  double b_value() const { return b.to_double(); }
};

/// Valid for n >= 2, 1 <= m <= n - 1. Throws InvariantViolation if the two
/// evaluation routes disagree.
CoeffPair coeffs_ab(int n, int m);

/// Sum of the coefficients of the ||x_i||^2 terms in ||y_J||^2, |J| = m.
struct CoefficientIdentity {
  int n = 0;
  int m = 0;
  Rational q_sum;
};

CoefficientIdentity coefficient_identity(int n, int m);

// ---------------------------------------------------------------------------
// Verification with exact escalation

/// Structured record of a failed existence check. A real one would contradict
/// a proven theorem, so it is reported rather than thrown away.
struct CriticalFinding {
  std::string check;                            // "theorem1", "theorem2", "find_suitable_vertex"
  int dim = -1;
  std::optional<int> vertex;                    // 0-based
  std::vector<std::vector<std::string>> vertices;  // exact "p/q" coordinates
  bool exact_confirmed = false;
  std::string detail;
};

class TheoremViolation : public std::runtime_error {
 public:
  explicit TheoremViolation(CriticalFinding finding);
  const CriticalFinding& finding() const { return finding_; }

 private:
  CriticalFinding finding_;
};

/// Suitability verdicts for a float simplex that are decided in floating
/// point when clear and in exact arithmetic when ‖y‖^2 is within `near_eps`
/// of 1. The exact simplex is the dyadic copy (shrunk into the ball if needed).
class CertifiedSuitability {
 public:
  explicit CertifiedSuitability(const Simplex<double>& s, double near_eps = kNearBoundaryEps);

  bool suitable(const FaceIndex& face);
  bool exact_suitable(const FaceIndex& face);
  double norm_sq(const FaceIndex& face) const;

  const Simplex<double>& simplex() const { return simplex_; }
  const GramSimplex& exact();
  const Simplex<Rational>& exact_coordinates();
  int escalations() const { return escalations_; }

 private:
  Simplex<double> simplex_;
  double near_eps_;
  Point<double> centroid_;
  std::optional<Simplex<Rational>> exact_coords_;
  std::optional<GramSimplex> exact_;
  std::map<std::vector<int>, bool> exact_cache_;
  int escalations_ = 0;
};

struct TheoremCheck {
  long faces_checked = 0;
  int escalations = 0;
  std::vector<CriticalFinding> violations;
};

/// Every dimension 0..n-1 has a suitable face.
TheoremCheck check_theorem1(const Simplex<double>& s, double near_eps = kNearBoundaryEps);
/// Every suitable vertex extends to a suitable face of every dimension 1..n-1.
TheoremCheck check_theorem2(const Simplex<double>& s, double near_eps = kNearBoundaryEps);

std::vector<std::vector<std::string>> exact_vertex_strings(const Simplex<Rational>& s);

// ---------------------------------------------------------------------------
// Reports

struct FaceEntry {
  FaceIndex face;
  std::string norm_sq;                  // 17 significant digits
  std::optional<std::string> norm_sq_rational;  // "p/q" when rational
  std::optional<QuadSurd> norm_sq_surd;   // exact mode
};

struct DimensionEntry {
  int dim = 0;
  std::vector<FaceEntry> faces;
};

struct SuitabilityReport {
  std::string vertices_hash;
  int n = 0;
  std::string mode;  // "exact" or "float"
  std::vector<DimensionEntry> dimensions;
  // Absent when the simplex is not contained in the unit ball.
  std::optional<bool> theorem1_holds;
  std::optional<bool> theorem2_holds;
};

/// Suitable faces for one dimension, or all when `dim` is empty.
SuitabilityReport build_suitability_report(const AnySimplex& s, std::optional<int> dim);

}  // namespace simplexball
