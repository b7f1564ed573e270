#pragma once

#include <string>
#include <string_view>

#include "simplexball/ellipsoid.hpp"
#include "simplexball/explorer.hpp"
#include "simplexball/simplex.hpp"
#include "simplexball/suitability.hpp"

namespace simplexball {

/// Reads {"vertices": [[...], ...]}: n+1 rows of n entries, all JSON numbers
/// (float mode) or all "p/q" strings (exact mode). Malformed or mixed input
/// throws ParseError; a degenerate simplex throws DegenerateSimplexError.
AnySimplex parse_simplex_json(std::string_view text);

std::string simplex_to_json(const AnySimplex& s);

/// FNV-1a of the canonical vertex serialization.
std::string vertices_hash(const AnySimplex& s);

/// {"center": [...], "shape": [[...]], "volume": v}; exact entries as "p/q".
std::string ellipsoid_to_json(const Ellipsoid<double>& e);
std::string ellipsoid_to_json(const Ellipsoid<Rational>& e);

std::string report_to_json(const SuitabilityReport& report);

}  // namespace simplexball
