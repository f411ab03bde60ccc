#pragma once

// Independent brute-force oracles. These deliberately avoid the library's
// algorithmic paths (bitset component search, gadget matching, pruned
// enumeration) so that agreement is meaningful.

#include <optional>
#include <string>
#include <vector>

#include "tfl/graph.hpp"
#include "tfl/rational.hpp"

namespace oracle {

// graph6 encoder written against the format description, not the library code.
std::string encode_graph6(const tfl::Graph& g);

// Exhaustive search for a spanning subgraph with every degree exactly 2.
bool has_two_factor(const tfl::Graph& g);

// Recursive perfect-matching existence (first unmatched vertex branches).
bool has_perfect_matching(const tfl::Graph& g);

// Full 2^n subset scan, adjacency walked via edge lists.
struct ToughnessValue {
    bool infinite = false;
    tfl::Rational value{0};
};
ToughnessValue toughness(const tfl::Graph& g);

// Full 3^n ordered-pair scan with an independently coded deficiency.
bool has_barrier(const tfl::Graph& g);
int delta_st(const tfl::Graph& g, std::vector<int> s, std::vector<int> t);

// Plain backtracking k-edge-colorability, no symmetry reduction.
bool k_edge_colorable(const tfl::Graph& g, int k);
int chi_prime(const tfl::Graph& g);

int girth(const tfl::Graph& g);  // -1 for forests

// Isomorphism by permutation scan (tiny n).
bool isomorphic(const tfl::Graph& a, const tfl::Graph& b);

}  // namespace oracle
