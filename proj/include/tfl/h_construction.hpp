#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tfl/factors.hpp"
#include "tfl/graph.hpp"

namespace tfl {

// The bipartite reduction of (G,S,T) for a biased barrier: even and singly
// attached odd components dropped, S flattened, each odd component with
// 2k+1 edges into T replaced by k stub vertices wired to its T-neighborhood.
struct ReducedBipartite {
    Graph h;
    VertexSet x_side, t_side;  // partite sets in h's vertex ids

    // provenance
    std::vector<int> orig_of;  // h id -> original vertex id, -1 for stubs
    struct StubInfo {
        int component_index;           // index into classification.odd
        int i;                         // 1-based stub index within the component
        VertexSet component_vertices;  // original ids
        std::vector<int> t_neighbors;  // h ids this stub attaches to
    };
    std::map<int, StubInfo> stubs;    // h id -> provenance
    std::map<int, int> h_id_of_orig;  // original S/T vertex -> h id

    int stub_count() const { return int(stubs.size()); }
};

ReducedBipartite build_h(const Graph& g, const BarrierCertificate& cert);

// The per-barrier bookkeeping used by the bipartite analysis: T split by the
// number of singly-attached odd components seen, S split by having a
// low-degree neighbor outside T, and the two largest odd components.
struct BarrierStatistics {
    VertexSet t1, t2;          // |H1(y)| == 1 / >= 2
    std::vector<int> h11, h12; // indices into classification.odd
    int m1 = 0, m2 = 0, m3 = 0;
    VertexSet s0, s1;
    std::map<int, int> p_y;    // y -> |H1(y)|
    std::optional<int> y_omega;
    bool y_omega_multiple = false;
    int d1_index = -1, d2_index = -1;  // largest / second largest odd component
};

BarrierStatistics compute_statistics(const Graph& g, const BarrierCertificate& cert);

struct HallResult {
    // matching as (x, y) pairs in h ids, present iff it saturates the T side
    std::optional<std::vector<std::pair<int, int>>> matching;
    // otherwise a smallest B subseteq T (h ids) with |N(B)| < |B|
    std::optional<VertexSet> violating;
    VertexSet violating_neighborhood;
};

HallResult hall_matching(const ReducedBipartite& rb);

struct ClaimCountingReport {
    bool identity_holds = false;    // sum of T degrees into U equals sum (2k+1)|H_{2k+1}|
    bool inequality_holds = false;  // |T| > |S| + sum k |H_{2k+1}|
    int degree_sum = 0;
    int weighted_odd_sum = 0;
    int t_size = 0;
    int x_size = 0;  // |S| + sum k |H_{2k+1}|

    bool pass() const { return identity_holds && inequality_holds; }
};

ClaimCountingReport verify_claim_counting(const Graph& g, const BarrierCertificate& cert);

}  // namespace tfl
