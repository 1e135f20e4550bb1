#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tld/graph.hpp"

namespace tld {

struct WeightedArc {
  std::size_t from = 0;
  std::size_t to = 0;
  Weight weight = 0;
};

inline constexpr std::size_t kNoArc = static_cast<std::size_t>(-1);

/// Minimum-cost spanning arborescence (Chu-Liu/Edmonds with cycle
/// contraction). Returns the chosen in-arc index for every vertex, kNoArc for
/// the root, or nullopt when some vertex is unreachable from the root.
/// Weights may be negative.
std::optional<std::vector<std::size_t>> min_cost_arborescence(std::size_t vertex_count,
                                                              std::size_t root,
                                                              std::span<const WeightedArc> arcs);

}  // namespace tld
