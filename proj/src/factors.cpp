#include "tfl/factors.hpp"

#include <algorithm>
#include <stdexcept>

#include "tfl/matching_core.hpp"

namespace tfl {

bool TwoFactor::valid(const Graph& g) const {
    VertexSet covered;
    for (const auto& cycle : cycles) {
        if (cycle.size() < 3) return false;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
            if (u < 0 || u >= g.n() || covered.contains(u)) return false;
            if (!g.adjacent(u, v)) return false;
            covered.add(u);
        }
    }
    return covered == g.vertices();
}

ComponentClassification classify_components(const Graph& g, VertexSet s, VertexSet t) {
    if (!(s & t).empty()) throw std::invalid_argument("classify_components: S and T overlap");
    ComponentClassification out;
    VertexSet ground = g.vertices() - s - t;
    for (const auto& part : components_of(g, ground).parts) {
        int to_t = g.edges_between(part, t);
        if (to_t % 2 == 1)
            out.odd.push_back({part, to_t});
        else
            out.even.push_back({part, to_t});
    }
    out.h = int(out.odd.size());
    for (int y : t.to_vector())
        for (std::size_t i = 0; i < out.odd.size(); ++i)
            if (g.degree_into(y, out.odd[i].vertices) > 0)
                out.odd_indices_at[y].push_back(int(i));
    return out;
}

int delta_st(const Graph& g, VertexSet s, VertexSet t) {
    if (!(s & t).empty()) throw std::invalid_argument("delta_st: S and T overlap");
    int h = 0;
    VertexSet ground = g.vertices() - s - t;
    for (const auto& part : components_of(g, ground).parts)
        if (g.edges_between(part, t) % 2 == 1) ++h;
    int deg_sum = 0;
    VertexSet not_s = g.vertices() - s;
    for (int y : t.to_vector()) deg_sum += g.degree_into(y, not_s);
    int delta = 2 * s.size() - 2 * t.size() + deg_sum - h;
    if (delta % 2 != 0) throw std::logic_error("delta_st: parity invariant violated");
    return delta;
}

GadgetGraph build_gadget(const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) < 2)
            throw std::invalid_argument("build_gadget: vertex of degree < 2 has no 2-factor");

    GadgetGraph gg;
    gg.base_edges = g.edges();
    gg.core_ids.resize(g.n());
    std::vector<std::vector<int>> stubs_of(g.n());  // stub gadget ids per vertex

    int next = 0;
    gg.stub_ids.resize(gg.base_edges.size());
    for (std::size_t e = 0; e < gg.base_edges.size(); ++e) {
        auto [u, v] = gg.base_edges[e];
        int su = next++, sv = next++;
        gg.stub_ids[e] = {su, sv};
        stubs_of[u].push_back(su);
        stubs_of[v].push_back(sv);
    }
    for (int v = 0; v < g.n(); ++v)
        for (int i = 0; i < g.degree(v) - 2; ++i) gg.core_ids[v].push_back(next++);

    gg.vertex_count = next;
    gg.adj.resize(next);
    for (auto [su, sv] : gg.stub_ids) {
        gg.adj[su].push_back(sv);
        gg.adj[sv].push_back(su);
    }
    for (int v = 0; v < g.n(); ++v)
        for (int core : gg.core_ids[v])
            for (int stub : stubs_of[v]) {
                gg.adj[core].push_back(stub);
                gg.adj[stub].push_back(core);
            }
    return gg;
}

namespace {

// Pull a 2-factor out of a perfect gadget matching: factor edges are the base
// edges whose two stubs are matched to each other.
TwoFactor recover_factor(const Graph& g, const GadgetGraph& gg, const std::vector<int>& mate) {
    std::vector<std::vector<int>> incident(g.n());
    for (std::size_t e = 0; e < gg.base_edges.size(); ++e) {
        auto [su, sv] = gg.stub_ids[e];
        if (mate[su] == sv) {
            incident[gg.base_edges[e].first].push_back(int(e));
            incident[gg.base_edges[e].second].push_back(int(e));
        }
    }
    TwoFactor tf;
    std::vector<bool> edge_used(gg.base_edges.size(), false);
    for (int start = 0; start < g.n(); ++start) {
        if (incident[start].size() != 2) throw std::logic_error("gadget matching is not 2-regular");
        if (edge_used[incident[start][0]]) continue;  // cycle through start already traced
        std::vector<int> cycle;
        int v = start;
        while (true) {
            int next_edge = -1;
            for (int e : incident[v])
                if (!edge_used[e]) { next_edge = e; break; }
            if (next_edge == -1) break;
            cycle.push_back(v);
            edge_used[next_edge] = true;
            auto [a, b] = gg.base_edges[next_edge];
            v = (a == v) ? b : a;
        }
        tf.cycles.push_back(std::move(cycle));
    }
    return tf;
}

// Ascending submask iteration driver: calls f(t) for every subset t of mask,
// in increasing numeric order. Stops early when f returns false.
template <typename F>
bool for_each_submask(std::uint64_t mask, F&& f) {
    std::uint64_t t = 0;
    while (true) {
        if (!f(t)) return false;
        if (t == mask) return true;
        t = (t - mask) & mask;
    }
}

}  // namespace

BarrierSearchResult find_barriers(const Graph& g, BarrierMode mode, Budget budget) {
    BarrierSearchResult res;
    int n = g.n();
    std::uint64_t all = VertexSet::full(n).bits;

    bool aborted = false;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> found;  // (S,T) masks

    for (std::uint64_t s = 0; s <= all && !aborted; ++s) {
        bool keep_going = for_each_submask(all & ~s, [&](std::uint64_t t) {
            if (!budget.tick()) { aborted = true; return false; }
            if (delta_st(g, VertexSet(s), VertexSet(t)) <= -2) {
                found.emplace_back(s, t);
                if (mode == BarrierMode::any) return false;
            }
            return true;
        });
        if (!keep_going && !aborted) break;  // mode any, hit
        if (n == 64) break;                  // avoid wrap; unreachable at desk scale
    }

    if (aborted && (found.empty() || mode != BarrierMode::any)) {
        res.status = Decision::undecided;
        if (mode != BarrierMode::any) return res;  // partial scans cannot claim optimality
    }
    if (found.empty()) return res;

    auto make_cert = [&](std::uint64_t s, std::uint64_t t, BarrierTier tier) {
        BarrierCertificate c;
        c.s = VertexSet(s);
        c.t = VertexSet(t);
        c.delta = delta_st(g, c.s, c.t);
        c.classification = classify_components(g, c.s, c.t);
        c.tier = tier;
        return c;
    };

    switch (mode) {
        case BarrierMode::any:
            res.barriers.push_back(make_cert(found[0].first, found[0].second, BarrierTier::plain));
            return res;
        case BarrierMode::all:
            for (auto [s, t] : found) res.barriers.push_back(make_cert(s, t, BarrierTier::plain));
            return res;
        case BarrierMode::biased:
        case BarrierMode::good_biased: {
            int best_s = 0;
            for (auto [s, t] : found) best_s = std::max(best_s, VertexSet(s).size());
            int best_t = 64;
            for (auto [s, t] : found)
                if (VertexSet(s).size() == best_s) best_t = std::min(best_t, VertexSet(t).size());
            std::vector<std::pair<std::uint64_t, std::uint64_t>> biased;
            for (auto [s, t] : found)
                if (VertexSet(s).size() == best_s && VertexSet(t).size() == best_t)
                    biased.emplace_back(s, t);
            if (mode == BarrierMode::biased) {
                for (auto [s, t] : biased)
                    res.barriers.push_back(make_cert(s, t, BarrierTier::biased));
                return res;
            }
            int best_h = INT32_MAX;
            std::vector<BarrierCertificate> certs;
            for (auto [s, t] : biased)
                certs.push_back(make_cert(s, t, BarrierTier::good_biased));
            for (const auto& c : certs) best_h = std::min(best_h, c.classification.h);
            for (auto& c : certs)
                if (c.classification.h == best_h) res.barriers.push_back(std::move(c));
            return res;
        }
    }
    return res;
}

TwoFactorResult find_two_factor(const Graph& g, Budget budget) {
    TwoFactorResult res;

    bool degree_ok = g.n() >= 3;
    for (int v = 0; degree_ok && v < g.n(); ++v)
        if (g.degree(v) < 2) degree_ok = false;

    if (degree_ok) {
        GadgetGraph gg = build_gadget(g);
        auto mate = maximum_matching_core(gg.vertex_count, gg.adj);
        bool perfect = true;
        for (int v = 0; v < gg.vertex_count; ++v)
            if (mate[v] == -1) { perfect = false; break; }
        if (perfect) {
            res.factor = recover_factor(g, gg, mate);
            return res;
        }
    }

    // no 2-factor: look for a Tutte barrier as the witness
    BarrierSearchResult bs = find_barriers(g, BarrierMode::any, budget);
    if (!bs.barriers.empty())
        res.barrier = bs.barriers.front();
    else
        res.barrier_search_exhausted = true;
    return res;
}

BiasedPropertyReport verify_biased_properties(const Graph& g, const BarrierCertificate& cert) {
    BiasedPropertyReport rep;
    const auto& cl = cert.classification;

    rep.t_independent = g.is_independent(cert.t);

    rep.even_components_detached = true;
    for (const auto& d : cl.even)
        if (g.edges_between(d.vertices, cert.t) != 0) rep.even_components_detached = false;

    rep.odd_multiplicity_bound = true;
    for (const auto& d : cl.odd)
        for (int y : cert.t.to_vector())
            if (g.degree_into(y, d.vertices) > 1) rep.odd_multiplicity_bound = false;

    rep.odd_vertex_bound = true;
    for (const auto& d : cl.odd)
        for (int x : d.vertices.to_vector())
            if (g.degree_into(x, cert.t) > 1) rep.odd_vertex_bound = false;

    return rep;
}

ComponentSizeReport verify_good_biased_component_size(const Graph& g,
                                                      const BarrierCertificate& cert) {
    (void)g;
    ComponentSizeReport rep;
    const auto& cl = cert.classification;
    for (const auto& [y, indices] : cl.odd_indices_at) {
        if (int(indices.size()) < 2) continue;
        for (int i : indices)
            if (cl.odd[i].vertices.size() < 3) {
                rep.pass = false;
                rep.failures.emplace_back(y, i);
            }
    }
    return rep;
}

}  // namespace tfl
