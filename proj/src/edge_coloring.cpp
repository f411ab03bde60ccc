#include "tfl/edge_coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace tfl {

bool EdgeColoring::is_proper(const Graph& g) const {
    if (edges.size() != std::size_t(g.m()) || color.size() != edges.size()) return false;
    std::vector<std::uint64_t> used(g.n(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        int c = color[i];
        if (c < 1 || c > palette || !g.adjacent(u, v)) return false;
        std::uint64_t bit = std::uint64_t(1) << c;
        if ((used[u] & bit) || (used[v] & bit)) return false;
        used[u] |= bit;
        used[v] |= bit;
    }
    return true;
}

int EdgeColoring::max_color_used() const {
    int k = 0;
    for (int c : color) k = std::max(k, c);
    return k;
}

EdgeColoring vizing_color(const Graph& g) {
    int n = g.n();
    int delta = g.max_degree();
    int k = std::max(delta + 1, 1);
    // at[v][c] = partner of v via color c, or -1
    std::vector<std::vector<int>> at(n, std::vector<int>(k + 1, -1));

    auto is_free = [&](int v, int c) { return at[v][c] == -1; };
    auto free_color = [&](int v) {
        for (int c = 1; c <= k; ++c)
            if (at[v][c] == -1) return c;
        throw std::logic_error("vizing_color: no free color");
    };
    auto set_color = [&](int u, int v, int c) { at[u][c] = v; at[v][c] = u; };
    auto unset_color = [&](int u, int v, int c) { at[u][c] = -1; at[v][c] = -1; };
    auto color_of = [&](int u, int v) {
        for (int c = 1; c <= k; ++c)
            if (at[u][c] == v) return c;
        return 0;
    };

    // Flip colors c <-> d along the maximal alternating path leaving x on its d-edge.
    auto invert_path = [&](int x, int d, int c) {
        std::vector<int> verts{x};
        std::vector<int> cols;
        int cur = x, col = d;
        while (at[cur][col] != -1) {
            int nxt = at[cur][col];
            cols.push_back(col);
            verts.push_back(nxt);
            cur = nxt;
            col = (col == d) ? c : d;
        }
        for (std::size_t i = 0; i < cols.size(); ++i)
            unset_color(verts[i], verts[i + 1], cols[i]);
        for (std::size_t i = 0; i < cols.size(); ++i)
            set_color(verts[i], verts[i + 1], cols[i] == d ? c : d);
    };

    for (auto [x, y] : g.edges()) {
        // maximal fan of x starting at y
        std::vector<int> fan{y};
        std::uint64_t in_fan = std::uint64_t(1) << y;
        while (true) {
            int cend = free_color(fan.back());
            int z = at[x][cend];
            if (z == -1 || (in_fan >> z) & 1) break;
            fan.push_back(z);
            in_fan |= std::uint64_t(1) << z;
        }
        int c = free_color(x);
        int d = free_color(fan.back());
        if (!is_free(x, d)) invert_path(x, d, c);
        // pick the shortest prefix fan whose end has d free, then rotate it
        int w = -1;
        for (std::size_t i = 0; i < fan.size(); ++i) {
            if (i > 0) {
                int ci = color_of(x, fan[i]);
                if (ci == 0 || !is_free(fan[i - 1], ci)) break;  // prefix no longer a fan
            }
            if (is_free(fan[i], d)) { w = int(i); break; }
        }
        if (w < 0) throw std::logic_error("vizing_color: fan rotation failed");
        for (int i = 0; i < w; ++i) {
            int ci = color_of(x, fan[i + 1]);
            unset_color(x, fan[i + 1], ci);
            set_color(x, fan[i], ci);
        }
        set_color(x, fan[w], d);
    }

    EdgeColoring out;
    out.edges = g.edges();
    out.palette = k;
    out.color.reserve(out.edges.size());
    for (auto [u, v] : out.edges) out.color.push_back(color_of(u, v));
    return out;
}

namespace {

enum class SearchOutcome { found, none, aborted };

// Backtracking existence check for a proper k-edge-coloring. Symmetry pruning:
// the star of a maximum-degree vertex is precolored 1..deg.
SearchOutcome exists_k_coloring(const Graph& g, int k, Budget& budget, EdgeColoring* witness) {
    auto edges = g.edges();
    int n = g.n();
    if (edges.empty()) {
        if (witness) { witness->edges.clear(); witness->color.clear(); witness->palette = k; }
        return SearchOutcome::found;
    }
    if (g.max_degree() > k) return SearchOutcome::none;

    int hub = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(hub)) hub = v;

    // order: hub star first, then greedily the edge most adjacent to ordered ones
    std::vector<int> order;
    std::vector<bool> placed(edges.size(), false);
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].first == hub || edges[i].second == hub) {
            order.push_back(int(i));
            placed[i] = true;
        }
    std::vector<int> vert_rank(n, 0);
    while (order.size() < edges.size()) {
        int best = -1, best_score = -1;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (placed[i]) continue;
            int score = vert_rank[edges[i].first] + vert_rank[edges[i].second] +
                        g.degree(edges[i].first) + g.degree(edges[i].second);
            if (score > best_score) { best_score = score; best = int(i); }
        }
        placed[best] = true;
        order.push_back(best);
        vert_rank[edges[best].first] += 64;  // dominate the degree tiebreak
        vert_rank[edges[best].second] += 64;
    }

    std::vector<std::uint64_t> used(n, 0);
    std::vector<int> assigned(edges.size(), 0);
    int star_size = 0;
    {
        int c = 1;
        for (int idx : order) {
            auto [u, v] = edges[idx];
            if (u != hub && v != hub) break;
            assigned[idx] = c;
            used[u] |= std::uint64_t(1) << c;
            used[v] |= std::uint64_t(1) << c;
            ++c;
            ++star_size;
        }
    }
    std::uint64_t all = (k >= 63) ? ~std::uint64_t(1) : ((std::uint64_t(1) << (k + 1)) - 2);

    SearchOutcome result = SearchOutcome::none;
    auto rec = [&](auto&& self, int pos) -> SearchOutcome {
        if (pos == int(order.size())) return SearchOutcome::found;
        int idx = order[pos];
        auto [u, v] = edges[idx];
        std::uint64_t avail = all & ~(used[u] | used[v]);
        for (std::uint64_t b = avail; b; b &= b - 1) {
            if (!budget.tick()) return SearchOutcome::aborted;
            int c = __builtin_ctzll(b);
            std::uint64_t bit = std::uint64_t(1) << c;
            assigned[idx] = c;
            used[u] |= bit;
            used[v] |= bit;
            SearchOutcome sub = self(self, pos + 1);
            if (sub != SearchOutcome::none) return sub;
            used[u] &= ~bit;
            used[v] &= ~bit;
            assigned[idx] = 0;
        }
        return SearchOutcome::none;
    };
    result = rec(rec, star_size);

    if (result == SearchOutcome::found && witness) {
        witness->edges = edges;
        witness->color = assigned;
        witness->palette = k;
    }
    return result;
}

}  // namespace

ChromaticIndexResult chromatic_index(const Graph& g, Budget budget) {
    ChromaticIndexResult res;
    int delta = g.max_degree();
    if (g.m() == 0) {
        res.value = 0;
        res.witness.palette = 0;
        return res;
    }
    EdgeColoring witness;
    switch (exists_k_coloring(g, delta, budget, &witness)) {
        case SearchOutcome::found:
            res.value = delta;
            res.witness = witness;
            return res;
        case SearchOutcome::none:
            res.value = delta + 1;
            res.witness = vizing_color(g);
            return res;
        case SearchOutcome::aborted:
            res.status = Decision::undecided;
            res.witness = vizing_color(g);  // upper bound witness
            res.value = res.witness.max_color_used();
            return res;
    }
    return res;
}

CriticalityReport is_delta_critical(const Graph& g, Budget budget) {
    CriticalityReport rep;
    rep.max_degree = g.max_degree();

    ChromaticIndexResult chi = chromatic_index(g, budget);
    if (chi.status == Decision::undecided) {
        rep.status = Decision::undecided;
        return rep;
    }
    rep.is_class_two = (g.m() > 0 && chi.value == rep.max_degree + 1);
    if (!rep.is_class_two || !is_connected(g)) {
        rep.is_critical = false;
        return rep;
    }
    // Edge deletions suffice: every proper subgraph sits inside some g - e.
    for (auto [u, v] : g.edges()) {
        Graph h = g.without_edge(u, v);
        switch (exists_k_coloring(h, rep.max_degree, budget, nullptr)) {
            case SearchOutcome::found:
                break;
            case SearchOutcome::none:
                rep.is_critical = false;
                rep.witness_edge = {u, v};
                return rep;
            case SearchOutcome::aborted:
                rep.status = Decision::undecided;
                return rep;
        }
    }
    rep.is_critical = true;
    return rep;
}

ValReport verify_val(const Graph& g) {
    ValReport rep;
    int delta = g.max_degree();
    for (int x = 0; x < g.n(); ++x) {
        for (int y : g.neighbors(x).to_vector()) {
            int required = delta - g.degree(y) + 1;
            int actual = 0;
            for (int z : g.neighbors(x).to_vector())
                if (z != y && g.degree(z) == delta) ++actual;
            rep.rows.push_back({x, y, required, actual});
            if (actual < required) rep.pass = false;
        }
    }
    return rep;
}

BipartiteBoundReport verify_lemma_bipartite_bound(const Graph& g, VertexSet t_set) {
    if (!g.is_independent(t_set))
        throw std::invalid_argument("verify_lemma_bipartite_bound: T must be independent");
    BipartiteBoundReport rep;
    int delta = g.max_degree();
    VertexSet s_set = g.vertices() - t_set;
    int delta0 = 0;
    for (int y : t_set.to_vector())
        if (g.degree(y) == delta) ++delta0;
    for (int x : s_set.to_vector()) {
        int dhx = g.degree_into(x, t_set);
        int sigma = 0;
        for (int z : (g.neighbors(x) & s_set).to_vector())
            if (g.degree(z) != delta) ++sigma;
        for (int y : (g.neighbors(x) & t_set).to_vector()) {
            int lhs = g.degree(y);  // T independent, so d_H(y) = d_G(y)
            int rhs = dhx + 1 - delta0 + sigma;
            rep.rows.push_back({x, y, lhs, rhs});
            if (lhs < rhs) rep.pass = false;
        }
    }
    return rep;
}

}  // namespace tfl
