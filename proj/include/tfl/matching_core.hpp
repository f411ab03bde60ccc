#pragma once

#include <vector>

namespace tfl {

// Blossom matching on a raw adjacency-list graph; used directly by the
// 2-factor gadget, whose vertex count can exceed the bitset Graph limit.
std::vector<int> maximum_matching_core(int n, const std::vector<std::vector<int>>& adj);

}  // namespace tfl
