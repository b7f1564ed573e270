#include "simplexball/simplex_json.hpp"

#include <json.hpp>

#include "simplexball/format.hpp"

namespace simplexball {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json vertices_json(const AnySimplex& any) {
  ordered_json rows = ordered_json::array();
  std::visit(
      [&](const auto& s) {
        for (const auto& v : s.vertices()) {
          ordered_json row = ordered_json::array();
          for (const auto& x : v.coords()) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, double>) {
              row.push_back(x);
            } else {
              row.push_back(to_string(x));
            }
          }
          rows.push_back(std::move(row));
        }
      },
      any);
  return rows;
}

template <Scalar T>
ordered_json scalar_json(const T& x) {
  if constexpr (std::is_same_v<T, double>) {
    return x;
  } else {
    return to_string(x);
  }
}

template <Scalar T>
std::string ellipsoid_json(const Ellipsoid<T>& e) {
  ordered_json j;
  ordered_json center = ordered_json::array();
  for (const auto& x : e.center.coords()) center.push_back(scalar_json(x));
  ordered_json shape = ordered_json::array();
  for (std::size_t r = 0; r < e.shape.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < e.shape.cols(); ++c) row.push_back(scalar_json(e.shape(r, c)));
    shape.push_back(std::move(row));
  }
  j["center"] = std::move(center);
  j["shape"] = std::move(shape);
  j["volume"] = e.volume();
  return j.dump();
}

}  // namespace

AnySimplex parse_simplex_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError("expected an object with a \"vertices\" array");
  }
  const auto& rows = doc["vertices"];
  bool any_number = false;
  bool any_string = false;
  for (const auto& row : rows) {
    if (!row.is_array()) throw ParseError("each vertex must be an array");
    for (const auto& x : row) {
      if (x.is_number()) {
        any_number = true;
      } else if (x.is_string()) {
        any_string = true;
      } else {
        throw ParseError("vertex entries must be numbers or \"p/q\" strings");
      }
    }
  }
  if (any_number && any_string) throw ParseError("mixed numeric and rational-string entries");

  try {
    if (any_string) {
      std::vector<Point<Rational>> vertices;
      for (const auto& row : rows) {
        std::vector<Rational> coords;
        for (const auto& x : row) coords.push_back(parse_rational(x.get<std::string>()));
        vertices.emplace_back(std::move(coords));
      }
      return Simplex<Rational>(std::move(vertices));
    }
    std::vector<Point<double>> vertices;
    for (const auto& row : rows) {
      std::vector<double> coords;
      for (const auto& x : row) coords.push_back(x.get<double>());
      vertices.emplace_back(std::move(coords));
    }
    return Simplex<double>(std::move(vertices));
  } catch (const ArgumentError& e) {
    throw ParseError(std::string("bad simplex shape: ") + e.what());
  }
}

std::string simplex_to_json(const AnySimplex& s) {
  ordered_json j;
  j["vertices"] = vertices_json(s);
  return j.dump();
}

std::string vertices_hash(const AnySimplex& s) { return fnv1a_hex(vertices_json(s).dump()); }

std::string ellipsoid_to_json(const Ellipsoid<double>& e) { return ellipsoid_json(e); }
std::string ellipsoid_to_json(const Ellipsoid<Rational>& e) { return ellipsoid_json(e); }

std::string report_to_json(const SuitabilityReport& report) {
  ordered_json j;
  j["vertices_hash"] = report.vertices_hash;
  j["n"] = report.n;
  j["mode"] = report.mode;
  ordered_json dims = ordered_json::array();
  for (const auto& entry : report.dimensions) {
    ordered_json faces = ordered_json::array();
    for (const auto& f : entry.faces) {
      ordered_json face;
      face["indices"] = f.face.one_based();
      face["norm_sq"] = f.norm_sq;
      if (f.norm_sq_rational) face["norm_sq_exact"] = *f.norm_sq_rational;
      if (f.norm_sq_surd) {
        face["norm_sq_surd"] = ordered_json{{"alpha", to_string(f.norm_sq_surd->alpha())},
                                            {"beta", to_string(f.norm_sq_surd->beta())},
                                            {"d", to_string(f.norm_sq_surd->d())}};
      }
      faces.push_back(std::move(face));
    }
    dims.push_back(ordered_json{{"dim", entry.dim}, {"count", entry.faces.size()}, {"suitable_faces", std::move(faces)}});
  }
  j["dimensions"] = std::move(dims);
  j["theorem1_holds"] = report.theorem1_holds ? ordered_json(*report.theorem1_holds) : ordered_json(nullptr);
  j["theorem2_holds"] = report.theorem2_holds ? ordered_json(*report.theorem2_holds) : ordered_json(nullptr);
  return j.dump(2);
}

}  // namespace simplexball
