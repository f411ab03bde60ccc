#pragma once

#include <vector>

#include "tfl/graph.hpp"

namespace tfl {

// All graphs on n <= 7 vertices, one representative per isomorphism class,
// in ascending canonical-code order. Larger corpora are ingested, not generated.
std::vector<Graph> enumerate_small(int n, bool connected_only);

// Minimum edge-mask over all vertex permutations; equal iff isomorphic.
std::uint64_t canonical_code(const Graph& g);

}  // namespace tfl
