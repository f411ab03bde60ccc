#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tfl/edge_coloring.hpp"  // Budget, Decision
#include "tfl/graph.hpp"

namespace tfl {

struct ClassifiedComponent {
    VertexSet vertices;
    int edges_to_t = 0;
};

// Odd/even split of the components of G - (S u T): a component is odd when it
// sends an odd number of edges to T.
struct ComponentClassification {
    std::vector<ClassifiedComponent> odd;   // ordered by minimum vertex id
    std::vector<ClassifiedComponent> even;  // same order
    int h = 0;                              // |odd|
    // y in T -> indices into odd with e(y, D) > 0
    std::map<int, std::vector<int>> odd_indices_at;

    int h_at(int y) const {
        auto it = odd_indices_at.find(y);
        return it == odd_indices_at.end() ? 0 : int(it->second.size());
    }
};

enum class BarrierTier { plain, biased, good_biased };

struct BarrierCertificate {
    VertexSet s, t;
    int delta = 0;
    ComponentClassification classification;
    BarrierTier tier = BarrierTier::plain;
};

struct TwoFactor {
    std::vector<std::vector<int>> cycles;  // each a cyclic vertex sequence, length >= 3

    bool valid(const Graph& g) const;
};

// Tutte f-factor gadget for f = 2: per vertex d(v) stubs joined completely to
// d(v)-2 core vertices, one stub-stub edge per original edge. A perfect
// matching of the gadget corresponds exactly to a 2-factor of g.
struct GadgetGraph {
    int vertex_count = 0;
    std::vector<std::vector<int>> adj;
    std::vector<std::pair<int, int>> base_edges;
    std::vector<std::pair<int, int>> stub_ids;  // per base edge: (stub at u, stub at v)
    std::vector<std::vector<int>> core_ids;     // per original vertex
};

ComponentClassification classify_components(const Graph& g, VertexSet s, VertexSet t);

// delta(S,T) = 2|S| - 2|T| + sum_{y in T} d_{G-S}(y) - h(S,T); always even.
int delta_st(const Graph& g, VertexSet s, VertexSet t);

GadgetGraph build_gadget(const Graph& g);  // throws if some degree < 2

struct TwoFactorResult {
    std::optional<TwoFactor> factor;
    std::optional<BarrierCertificate> barrier;
    // no 2-factor proven on the matching side but no (S,T) witness in budget
    bool barrier_search_exhausted = false;

    bool has_factor() const { return factor.has_value(); }
};

TwoFactorResult find_two_factor(const Graph& g, Budget budget = Budget());

enum class BarrierMode { any, all, biased, good_biased };

struct BarrierSearchResult {
    Decision status = Decision::decided;
    std::vector<BarrierCertificate> barriers;  // lexicographic (S,T) order
};

BarrierSearchResult find_barriers(const Graph& g, BarrierMode mode, Budget budget = Budget());

// The four structural properties of a biased barrier: T independent, even
// components untouched by T, odd components meeting each T vertex at most
// once, and odd-component vertices meeting T at most once.
struct BiasedPropertyReport {
    bool t_independent = false;
    bool even_components_detached = false;
    bool odd_multiplicity_bound = false;
    bool odd_vertex_bound = false;

    bool all() const {
        return t_independent && even_components_detached && odd_multiplicity_bound &&
               odd_vertex_bound;
    }
};

BiasedPropertyReport verify_biased_properties(const Graph& g, const BarrierCertificate& cert);

struct ComponentSizeReport {
    bool pass = true;
    std::vector<std::pair<int, int>> failures;  // (y, odd component index)
};

ComponentSizeReport verify_good_biased_component_size(const Graph& g,
                                                      const BarrierCertificate& cert);

}  // namespace tfl
