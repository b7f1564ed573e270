#include "simplexball/sampling.hpp"

#include <cmath>
#include <string>

namespace simplexball {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr int kMaxRejections = 1000;

}  // namespace

std::string_view to_string(SampleMode mode) {
  return mode == SampleMode::inscribed ? "inscribed" : "in-ball";
}

SampleMode parse_sample_mode(std::string_view text) {
  if (text == "inscribed") return SampleMode::inscribed;
  if (text == "in-ball") return SampleMode::in_ball;
  throw ArgumentError("unknown sampling mode '" + std::string(text) + "' (expected inscribed or in-ball)");
}

std::uint64_t trial_stream_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(splitmix64(seed) ^ splitmix64(trial + 0x632be59bd9b4e019ULL));
}

Point<double> random_unit_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  while (true) {
    Point<double> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = normal(rng);
    const double len = std::sqrt(norm_sq(p));
    if (len > 1e-300) {
      p *= 1.0 / len;
      return p;
    }
  }
}

Point<double> random_ball_point(int n, std::mt19937_64& rng) {
  Point<double> p = random_unit_vector(n, rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  p *= std::pow(unit(rng), 1.0 / n);
  return p;
}

Simplex<double> random_simplex(int n, SampleMode mode, std::mt19937_64& rng) {
  if (n < 1) throw ArgumentError("random_simplex needs n >= 1");
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    std::vector<Point<double>> vertices;
    vertices.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      vertices.push_back(mode == SampleMode::inscribed ? random_unit_vector(n, rng) : random_ball_point(n, rng));
    }
    try {
      return Simplex<double>(std::move(vertices));
    } catch (const DegenerateSimplexError&) {
    }
  }
  throw SamplingError("1000 consecutive degenerate draws");
}

Simplex<double> random_simplex(int n, SampleMode mode, std::uint64_t seed, std::uint64_t trial) {
  std::mt19937_64 rng(trial_stream_seed(seed, trial));
  return random_simplex(n, mode, rng);
}

}  // namespace simplexball
