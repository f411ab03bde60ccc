#pragma once

#include <optional>

#include "tfl/edge_coloring.hpp"  // Budget, Decision
#include "tfl/graph.hpp"
#include "tfl/rational.hpp"

namespace tfl {

struct ToughnessCertificate {
    Decision status = Decision::decided;
    bool infinite = false;       // complete graphs
    Rational value{0};           // meaningful when finite and decided
    std::optional<VertexSet> cut;
    int component_count = 0;
    // best upper bound seen when undecided
    std::optional<Rational> upper_bound;

    std::string value_str() const {
        if (status == Decision::undecided) return "undecided";
        return infinite ? "inf" : value.str();
    }
};

// Exact toughness: minimum of |S| / c(G-S) over cuts with c(G-S) >= 2,
// by subset enumeration in increasing cut size with a ratio bound.
ToughnessCertificate toughness(const Graph& g, Budget budget = Budget());

// tau(g) >= t, compared exactly as rationals; nullopt when undecided in budget.
std::optional<bool> is_t_tough(const Graph& g, Rational t, Budget budget = Budget());

}  // namespace tfl
