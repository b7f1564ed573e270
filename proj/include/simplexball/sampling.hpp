#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "simplexball/simplex.hpp"

namespace simplexball {

enum class SampleMode { inscribed, in_ball };

std::string_view to_string(SampleMode mode);
/// "inscribed" or "in-ball"; throws ArgumentError otherwise.
SampleMode parse_sample_mode(std::string_view text);

/// Seed of the independent random stream for one trial: a SplitMix64-style
/// mix of (seed, trial). Pure function, so trials can run in any order.
std::uint64_t trial_stream_seed(std::uint64_t seed, std::uint64_t trial);

/// Uniform direction on the unit sphere in R^n (normalized standard normals).
Point<double> random_unit_vector(int n, std::mt19937_64& rng);
/// Uniform point in the closed unit ball in R^n.
Point<double> random_ball_point(int n, std::mt19937_64& rng);

/// Random nondegenerate simplex drawn from `rng`; degenerate draws are
/// rejected and redrawn. Throws SamplingError after 1000 consecutive rejections.
Simplex<double> random_simplex(int n, SampleMode mode, std::mt19937_64& rng);

/// The simplex for (seed, trial); identical bits on every call.
Simplex<double> random_simplex(int n, SampleMode mode, std::uint64_t seed, std::uint64_t trial);

}  // namespace simplexball
