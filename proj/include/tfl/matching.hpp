#pragma once

#include <optional>
#include <vector>

#include "tfl/graph.hpp"

namespace tfl {

// Maximum cardinality matching in a general graph (Edmonds blossom algorithm,
// O(n^3)). Returns mate[v] = partner or -1.
std::vector<int> maximum_matching(const Graph& g);

// Matching saturating every vertex, or nullopt. Odd n short-circuits to nullopt.
std::optional<std::vector<std::pair<int, int>>> perfect_matching(const Graph& g);

}  // namespace tfl
