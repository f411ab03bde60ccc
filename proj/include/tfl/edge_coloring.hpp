#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tfl/graph.hpp"

namespace tfl {

// Node-expansion counter shared by the budgeted exhaustive searches.
// Deterministic (wall-clock independent), so undecided sets are reproducible.
struct Budget {
    std::uint64_t limit;
    std::uint64_t used = 0;

    explicit Budget(std::uint64_t lim = 50'000'000) : limit(lim) {}
    bool tick() { return ++used <= limit; }
    bool exhausted() const { return used > limit; }
};

struct EdgeColoring {
    std::vector<std::pair<int, int>> edges;  // canonical (u<v) column order
    std::vector<int> color;                  // 1-based, parallel to edges
    int palette = 0;

    bool is_proper(const Graph& g) const;
    int max_color_used() const;
};

enum class Decision { decided, undecided };

// Proper coloring with at most max_degree+1 colors (Misra–Gries fan procedure).
EdgeColoring vizing_color(const Graph& g);

struct ChromaticIndexResult {
    Decision status = Decision::decided;
    int value = 0;  // max_degree or max_degree+1 when decided
    EdgeColoring witness;
};

// Exact class decision by backtracking; undecided when the budget runs out.
ChromaticIndexResult chromatic_index(const Graph& g, Budget budget = Budget());

struct CriticalityReport {
    Decision status = Decision::decided;
    bool is_class_two = false;
    bool is_critical = false;
    int max_degree = 0;
    // Edge whose deletion keeps the chromatic index above max_degree (disproof witness).
    std::optional<std::pair<int, int>> witness_edge;
};

CriticalityReport is_delta_critical(const Graph& g, Budget budget = Budget());

// Vizing's Adjacency Lemma check: per ordered edge (x,y), x must have at least
// max_degree - d(y) + 1 neighbors of maximum degree other than y.
struct ValRow {
    int x, y, required, actual;
};
struct ValReport {
    std::vector<ValRow> rows;
    bool pass = true;
};
ValReport verify_val(const Graph& g);

// Bipartite degree bound for an independent set T: with S = V - T and H the
// graph minus all edges inside S, every H-edge xy (x in S, y in T) satisfies
// d_H(y) >= d_H(x) + 1 - delta0 + sigma_x.
struct BipartiteBoundRow {
    int x, y, lhs, rhs;
};
struct BipartiteBoundReport {
    std::vector<BipartiteBoundRow> rows;
    bool pass = true;
};
BipartiteBoundReport verify_lemma_bipartite_bound(const Graph& g, VertexSet t_set);

}  // namespace tfl
