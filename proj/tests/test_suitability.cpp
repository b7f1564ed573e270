#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "simplexball/combinations.hpp"
#include "simplexball/errors.hpp"
#include "simplexball/sampling.hpp"
#include "simplexball/suitability.hpp"

using namespace simplexball;

namespace {

Rational q(long p, long d = 1) { return ratio(p, d); }

std::vector<FaceIndex> all_faces(int vertex_count, int size) {
  std::vector<FaceIndex> out;
  for_each_face(vertex_count, size, [&](const FaceIndex& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

// Pair sums for the vertex condition, straight from the vertices.
double pairs_avoiding(const Simplex<double>& s, int v) {
  double sum = 0;
  for (int i = 0; i < s.vertex_count(); ++i) {
    for (int j = i + 1; j < s.vertex_count(); ++j) {
      if (i != v && j != v) sum += dot(s.vertex(i), s.vertex(j));
    }
  }
  return sum;
}

double star_at(const Simplex<double>& s, int v) {
  double sum = 0;
  for (int j = 0; j < s.vertex_count(); ++j) {
    if (j != v) sum += dot(s.vertex(v), s.vertex(j));
  }
  return sum;
}

Rational pairs_avoiding(const GramSimplex& s, int v) {
  Rational sum(0);
  for (int i = 0; i < s.vertex_count(); ++i) {
    for (int j = i + 1; j < s.vertex_count(); ++j) {
      if (i != v && j != v) sum += s.entry(i, j);
    }
  }
  return sum;
}

Rational star_at(const GramSimplex& s, int v) {
  Rational sum(0);
  for (int j = 0; j < s.vertex_count(); ++j) {
    if (j != v) sum += s.entry(v, j);
  }
  return sum;
}

}  // namespace

TEST_CASE("find_suitable_vertex examples") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(find_suitable_vertex(regular_inscribed_simplex(n)) == 0);
    CHECK(find_suitable_vertex(regular_inscribed_gram(n)) == 0);
  }
  CHECK(find_suitable_vertex(oracle::triangle()) == 1);
  CHECK(find_suitable_vertex(oracle::triangle_exact()) == 1);
  CHECK(find_suitable_vertex(Simplex<double>({{-1.0}, {1.0}})) == 0);

  Simplex<double> outside({{2.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}});
  CHECK_THROWS_AS(find_suitable_vertex(outside), ArgumentError);
}

TEST_CASE("find_suitable_vertex returns a suitable vertex") {
  for (int n = 2; n <= 7; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto mode = trial % 2 ? SampleMode::in_ball : SampleMode::inscribed;
      const auto s = random_simplex(n, mode, 21, static_cast<std::uint64_t>(trial));
      const int v = find_suitable_vertex(s);
      CHECK(is_suitable(s, FaceIndex({v}, n + 1)));
      CertifiedSuitability cert(s);
      CHECK(cert.exact_suitable(FaceIndex({find_suitable_vertex(cert.exact())}, n + 1)));
    }
  }
}

TEST_CASE("suitable_faces examples") {
  for (int n = 1; n <= 7; ++n) {
    const auto reg = regular_inscribed_simplex(n);
    const auto gram = regular_inscribed_gram(n);
    for (int dim = 0; dim < n; ++dim) {
      CHECK(suitable_faces(reg, dim) == all_faces(n + 1, dim + 1));
      CHECK(suitable_faces(gram, dim) == all_faces(n + 1, dim + 1));
      CHECK(suitable_faces(reg, dim).size() == binomial(n + 1, dim + 1));
    }
  }
  for (int n = 2; n <= 6; ++n) {
    const auto s = random_simplex(n, SampleMode::in_ball, 2, static_cast<std::uint64_t>(n));
    CHECK(suitable_faces(s, n - 1) == all_faces(n + 1, n));
  }
  CHECK(suitable_faces(oracle::triangle(), 0) == std::vector<FaceIndex>{FaceIndex({1}, 3)});
  CHECK(suitable_faces(oracle::triangle_exact(), 0) == std::vector<FaceIndex>{FaceIndex({1}, 3)});
  CHECK(suitable_faces(oracle::triangle_exact(), 1) == all_faces(3, 2));
  CHECK_THROWS_AS(suitable_faces(oracle::triangle(), 2), ArgumentError);
  CHECK_THROWS_AS(suitable_faces(oracle::triangle(), -1), ArgumentError);
}

TEST_CASE("suitable_faces equals brute-force filtering") {
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto s = random_simplex(n, SampleMode::in_ball, 9, static_cast<std::uint64_t>(trial));
      for (int dim = 0; dim < n; ++dim) {
        std::vector<FaceIndex> expected;
        for (const auto& f : all_faces(n + 1, dim + 1)) {
          if (oracle::y_norm_sq_by_ray(s, [&] {
                unsigned mask = 0;
                for (int i : f.indices()) mask |= 1u << i;
                return mask;
              }()) <= 1.0L + 1e-9L) {
            expected.push_back(f);
          }
        }
        CHECK(suitable_faces(s, dim) == expected);
      }
    }
  }
}

TEST_CASE("extend_suitable_face examples") {
  CHECK(extend_suitable_face(oracle::triangle(), 1, 1) == FaceIndex({0, 1}, 3));
  CHECK(extend_suitable_face(oracle::triangle_exact(), 1, 1) == FaceIndex({0, 1}, 3));
  CHECK_THROWS_AS(extend_suitable_face(oracle::triangle(), 0, 1), ArgumentError);
  CHECK_THROWS_AS(extend_suitable_face(oracle::triangle_exact(), 0, 1), ArgumentError);

  for (int n = 2; n <= 7; ++n) {
    const auto reg = regular_inscribed_simplex(n);
    for (int dim = 1; dim < n; ++dim) {
      std::vector<int> first(static_cast<std::size_t>(dim) + 1);
      for (int i = 0; i <= dim; ++i) first[static_cast<std::size_t>(i)] = i;
      CHECK(extend_suitable_face(reg, 0, dim) == FaceIndex(first, n + 1));
      CHECK(extend_suitable_face(regular_inscribed_gram(n), 0, dim) == FaceIndex(first, n + 1));
    }
  }

  for (int n = 2; n <= 6; ++n) {
    const auto s = random_simplex(n, SampleMode::in_ball, 6, static_cast<std::uint64_t>(n));
    const int v = find_suitable_vertex(s);
    // Smallest facet containing v: drop the largest index other than v.
    std::vector<int> facet;
    const int dropped = v == n ? n - 1 : n;
    for (int i = 0; i <= n; ++i) {
      if (i != dropped) facet.push_back(i);
    }
    CHECK(extend_suitable_face(s, v, n - 1) == FaceIndex(facet, n + 1));
  }
}

TEST_CASE("extension result is the lexicographically first suitable superset") {
  for (int n = 3; n <= 6; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto s = random_simplex(n, SampleMode::inscribed, 14, static_cast<std::uint64_t>(trial));
      for (int v = 0; v <= n; ++v) {
        if (!is_suitable(s, FaceIndex({v}, n + 1))) continue;
        for (int dim = 1; dim < n; ++dim) {
          const auto got = extend_suitable_face(s, v, dim);
          CHECK(got.contains(v));
          CHECK(is_suitable(s, got));
          for (const auto& f : all_faces(n + 1, dim + 1)) {
            if (!(f < got)) break;
            if (f.contains(v)) CHECK_FALSE(is_suitable(s, f));
          }
        }
      }
    }
  }
}

TEST_CASE("coeffs_ab examples") {
  auto c31 = coeffs_ab(3, 1);
  CHECK(c31.a_value() == doctest::Approx(std::sqrt(3.0) / 4.0));
  CHECK(c31.b_value() == doctest::Approx(std::sqrt(3.0) / 4.0));
  CHECK(c31.a.d() == q(3));
  CHECK(surd_cmp(c31.a, c31.b) == 0);

  for (auto [n, m] : {std::pair{2, 1}, std::pair{3, 2}}) {
    auto c = coeffs_ab(n, m);
    CHECK(surd_cmp(c.a, Rational(0)) == 0);
    CHECK(surd_cmp(c.b, Rational(0)) == 0);
  }
  CHECK_THROWS_AS(coeffs_ab(1, 1), ArgumentError);
  CHECK_THROWS_AS(coeffs_ab(4, 0), ArgumentError);
  CHECK_THROWS_AS(coeffs_ab(4, 4), ArgumentError);
}

TEST_CASE("coeffs_ab proportionality and sign") {
  for (int n = 2; n <= 50; ++n) {
    for (int m = 1; m <= n - 1; ++m) {
      const auto c = coeffs_ab(n, m);
      CHECK(c.a.same_representation(c.a_expanded));
      CHECK(c.b.same_representation(c.b_expanded));
      const QuadSurd lhs = Rational(2) * c.b;
      const QuadSurd rhs = Rational(n - 1) * c.a;
      CHECK(lhs.same_representation(rhs));
      if (m <= n - 2) {
        CHECK(surd_cmp(c.a, Rational(0)) > 0);
      } else {
        // rho'^2 = n^2 here, so the zero shows up as alpha + beta * n = 0.
        CHECK(c.a.d() == Rational(n * n));
        CHECK(surd_cmp(c.a, Rational(0)) == 0);
        CHECK(surd_cmp(c.b, Rational(0)) == 0);
      }
    }
  }
}

TEST_CASE("sum of squared norms splits into the two scalar-product groups") {
  // sum_{J' containing v} ||y_J'||^2 - C(n, m) = a S1 - b S2 on inscribed simplices.
  for (int n = 3; n <= 7; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto s = random_simplex(n, SampleMode::inscribed, 44, static_cast<std::uint64_t>(trial));
      const int v = find_suitable_vertex(s);
      for (int m = 1; m <= n - 1; ++m) {
        const auto c = coeffs_ab(n, m);
        const auto bound = sum_bound_check(s, v, m);
        const double lhs = bound.sum - to_double(bound.bound);
        const double rhs = c.a_value() * pairs_avoiding(s, v) - c.b_value() * star_at(s, v);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9).scale(1.0));
      }
    }
  }

  std::mt19937_64 rng(8);
  for (int n = 3; n <= 5; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto gram = gram_of(oracle::random_rational_inscribed(n, 3, rng));
      REQUIRE(gram.inscribed());
      const int v = find_suitable_vertex(gram);
      for (int m = 1; m <= n - 1; ++m) {
        const auto c = coeffs_ab(n, m);
        const auto bound = sum_bound_check(gram, v, m);
        QuadSurd lhs = bound.sum - QuadSurd::rational(bound.bound, bound.sum.d());
        QuadSurd rhs = c.a * pairs_avoiding(gram, v) - c.b * star_at(gram, v);
        CHECK(surd_cmp(lhs, rhs) == 0);
      }
    }
  }
}

TEST_CASE("vertex_condition examples") {
  for (int n = 2; n <= 8; ++n) {
    const auto gram = regular_inscribed_gram(n);
    for (int v = 0; v <= n; ++v) {
      CHECK(vertex_condition(gram, v));
      CHECK(pairs_avoiding(gram, v) == ratio(-(n - 1), 2));
      CHECK(ratio(n - 1, 2) * star_at(gram, v) == ratio(-(n - 1), 2));
      CHECK(vertex_condition(regular_inscribed_simplex(n), v));
    }
  }
  CHECK(vertex_condition(oracle::triangle_exact(), 1));
  CHECK_FALSE(vertex_condition(oracle::triangle_exact(), 0));
  CHECK(vertex_condition(oracle::triangle(), 1));
  CHECK_FALSE(vertex_condition(oracle::triangle(), 0));

  Simplex<double> not_inscribed({{0.5, 0.0}, {0.0, 1.0}, {-1.0, 0.0}});
  CHECK_THROWS_AS(vertex_condition(not_inscribed, 0), ArgumentError);
  CHECK_THROWS_AS(vertex_condition(exact_copy(not_inscribed), 0), ArgumentError);
}

TEST_CASE("vertex_condition matches vertex suitability on 10^4 inscribed samples") {
  int escalated = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 2 + trial % 5;
    const auto s = random_simplex(n, SampleMode::inscribed, 1234, static_cast<std::uint64_t>(trial));
    for (int v = 0; v <= n; ++v) {
      const FaceIndex f({v}, n + 1);
      if (std::abs(y_norm_sq(s, f) - 1.0) > kNearBoundaryEps) {
        CHECK(vertex_condition(s, v) == is_suitable(s, f));
      } else {
        ++escalated;
        const auto e = gram_of(exact_copy_in_ball(s));
        if (e.inscribed()) CHECK(vertex_condition(e, v) == is_suitable(e, f));
      }
    }
  }
  MESSAGE("near-boundary vertices: " << escalated);

  std::mt19937_64 rng(90);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 4;
    const auto gram = gram_of(oracle::random_rational_inscribed(n, 4, rng));
    for (int v = 0; v <= n; ++v) CHECK(vertex_condition(gram, v) == is_suitable(gram, FaceIndex({v}, n + 1)));
  }
}

TEST_CASE("sum_bound_check examples") {
  for (int n = 2; n <= 8; ++n) {
    const auto gram = regular_inscribed_gram(n);
    for (int dim = 1; dim < n; ++dim) {
      const auto b = sum_bound_check(gram, 0, dim);
      CHECK(b.holds);
      CHECK(b.bound == Rational(mpz_class(static_cast<unsigned long>(binomial(n, dim)))));
      CHECK(surd_cmp(b.sum, b.bound) == 0);
      const auto f = sum_bound_check(regular_inscribed_simplex(n), 0, dim);
      CHECK(f.sum == doctest::Approx(to_double(f.bound)).epsilon(1e-10));
    }
  }

  const auto t = sum_bound_check(oracle::triangle_exact(), 1, 1);
  CHECK(t.holds);
  CHECK(surd_cmp(t.sum, Rational(2)) == 0);
  CHECK(t.bound == 2);
  CHECK_THROWS_AS(sum_bound_check(oracle::triangle_exact(), 0, 1), ArgumentError);
  CHECK_THROWS_AS(sum_bound_check(oracle::triangle(), 0, 1), ArgumentError);
  CHECK_THROWS_AS(sum_bound_check(oracle::triangle(), 1, 0), ArgumentError);
  CHECK_THROWS_AS(sum_bound_check(oracle::triangle(), 1, 2), ArgumentError);
}

TEST_CASE("sum bound holds on 10^4 inscribed 4-simplices and implies a suitable face") {
  for (int trial = 0; trial < 10000; ++trial) {
    const auto s = random_simplex(4, SampleMode::inscribed, 4242, static_cast<std::uint64_t>(trial));
    const int v = find_suitable_vertex(s);
    const auto b = sum_bound_check(s, v, 2);
    CHECK(b.holds);
    // Averaging: some face in the sum has ||y||^2 <= 1.
    bool found = false;
    for_each_superset(FaceIndex({v}, 5), 3, [&](const FaceIndex& f) {
      found = found || y_norm_sq(s, f) <= 1.0 + kSuitableTolerance;
      return !found;
    });
    CHECK(found);
  }
}

TEST_CASE("theorem checks on random simplices") {
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto mode = trial % 2 ? SampleMode::in_ball : SampleMode::inscribed;
      const auto s = random_simplex(n, mode, 300, static_cast<std::uint64_t>(trial));
      const auto t1 = check_theorem1(s);
      const auto t2 = check_theorem2(s);
      CHECK(t1.violations.empty());
      CHECK(t2.violations.empty());
      CHECK(t1.faces_checked > 0);
    }
  }
  // The regular simplex sits on the boundary everywhere, so every verdict escalates.
  const auto reg = regular_inscribed_simplex(4);
  const auto t = check_theorem1(reg);
  CHECK(t.violations.empty());
  CHECK(t.escalations > 0);
}

TEST_CASE("certified suitability escalates near the boundary") {
  const auto reg = regular_inscribed_simplex(5);
  CertifiedSuitability cert(reg);
  CHECK(cert.suitable(FaceIndex({0, 1}, 6)));
  CHECK(cert.escalations() == 1);
  CHECK(cert.suitable(FaceIndex({0, 1}, 6)));
  CHECK(cert.escalations() == 2);
  CHECK(max_vertex_norm_sq(cert.exact_coordinates()) <= 1);

  CertifiedSuitability tri(oracle::triangle());
  CHECK_FALSE(tri.suitable(FaceIndex({0}, 3)));
  CHECK(tri.suitable(FaceIndex({1}, 3)));
  CHECK(tri.escalations() == 0);
}

TEST_CASE("suitability report") {
  AnySimplex tri = oracle::triangle_exact();
  const auto r = build_suitability_report(tri, 0);
  CHECK(r.mode == "exact");
  CHECK(r.n == 2);
  REQUIRE(r.dimensions.size() == 1);
  REQUIRE(r.dimensions[0].faces.size() == 1);
  const auto& e = r.dimensions[0].faces[0];
  CHECK(e.face == FaceIndex({1}, 3));
  CHECK(e.norm_sq_rational == std::optional<std::string>("1/9"));
  CHECK(r.theorem1_holds == std::optional<bool>(true));
  CHECK(r.theorem2_holds == std::optional<bool>(true));

  const auto all = build_suitability_report(AnySimplex(oracle::triangle()), std::nullopt);
  CHECK(all.mode == "float");
  CHECK(all.dimensions.size() == 2);
  CHECK(all.dimensions[1].faces.size() == 3);

  AnySimplex big = Simplex<double>({{2.0, 0.0}, {0.0, 2.0}, {-2.0, 0.0}});
  const auto out = build_suitability_report(big, std::nullopt);
  CHECK_FALSE(out.theorem1_holds.has_value());
  CHECK_FALSE(out.theorem2_holds.has_value());
}
