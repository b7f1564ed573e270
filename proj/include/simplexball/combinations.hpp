#pragma once

#include <cstdint>
#include <vector>

#include "simplexball/errors.hpp"
#include "simplexball/simplex.hpp"

namespace simplexball {

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
std::uint64_t binomial(int n, int k);

/// Calls `visit(const std::vector<int>&)` for every k-element subset of
/// `pool` (taken in the order given), in lexicographic order of positions.
/// Stops early when `visit` returns false. Returns false if stopped early.
template <class Visit>
bool for_each_combination(const std::vector<int>& pool, int k, Visit&& visit) {
  if (k < 0 || k > static_cast<int>(pool.size())) return true;
  const std::size_t size = pool.size();
  const std::size_t kk = static_cast<std::size_t>(k);
  std::vector<std::size_t> pos(kk);
  for (std::size_t i = 0; i < kk; ++i) pos[i] = i;
  std::vector<int> subset(kk);
  while (true) {
    for (std::size_t i = 0; i < kk; ++i) subset[i] = pool[pos[i]];
    if (!visit(static_cast<const std::vector<int>&>(subset))) return false;
    // Rightmost position that can still advance.
    std::size_t i = kk;
    while (i > 0 && pos[i - 1] == size - kk + (i - 1)) --i;
    if (i == 0) return true;
    ++pos[i - 1];
    for (std::size_t j = i; j < kk; ++j) pos[j] = pos[j - 1] + 1;
  }
}

/// All faces with `size` vertices of a simplex with `vertex_count` vertices,
/// lexicographic.
template <class Visit>
bool for_each_face(int vertex_count, int size, Visit&& visit) {
  std::vector<int> pool(static_cast<std::size_t>(vertex_count));
  for (int i = 0; i < vertex_count; ++i) pool[static_cast<std::size_t>(i)] = i;
  return for_each_combination(pool, size, [&](const std::vector<int>& subset) {
    return visit(FaceIndex(subset, vertex_count));
  });
}

/// All faces with `size` vertices that contain `base`, lexicographic.
template <class Visit>
bool for_each_superset(const FaceIndex& base, int size, Visit&& visit) {
  const std::vector<int> rest = base.complement();
  return for_each_combination(rest, size - base.size(), [&](const std::vector<int>& extra) {
    std::vector<int> merged;
    merged.reserve(static_cast<std::size_t>(size));
    std::size_t a = 0;
    std::size_t b = 0;
    const auto& own = base.indices();
    while (a < own.size() || b < extra.size()) {
      if (b == extra.size() || (a < own.size() && own[a] < extra[b])) {
        merged.push_back(own[a++]);
      } else {
        merged.push_back(extra[b++]);
      }
    }
    return visit(FaceIndex(std::move(merged), base.vertex_count()));
  });
}

}  // namespace simplexball
