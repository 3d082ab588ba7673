#pragma once

#include <optional>
#include <span>
#include <vector>

#include "eulerext/weight.hpp"

namespace eulerext {

struct BipartiteEdge {
  int left = 0;
  int right = 0;
  Weight weight = 0;
  auto operator<=>(const BipartiteEdge&) const = default;
};

// Minimum-weight perfect matching by shortest augmenting paths with vertex
// potentials. Infinite edges are treated as absent. Returned edges are
// sorted by left endpoint. nullopt when no perfect matching exists.
std::optional<std::vector<BipartiteEdge>> min_weight_perfect_matching(
    int left_count, int right_count, std::span<const BipartiteEdge> edges);

}  // namespace eulerext
