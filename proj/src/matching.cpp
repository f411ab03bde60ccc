#include "tfl/matching.hpp"

#include "tfl/matching_core.hpp"

#include <queue>

namespace tfl {

std::vector<int> maximum_matching_core(int n, const std::vector<std::vector<int>>& adj) {
    std::vector<int> mate(n, -1);
    std::vector<int> parent(n), base(n);
    std::vector<bool> used(n), blossom(n);

    auto lca = [&](int a, int b) {
        std::vector<bool> seen(n, false);
        // walk up from a marking bases, then walk from b until a marked base
        for (int v = a;;) {
            v = base[v];
            seen[v] = true;
            if (mate[v] == -1) break;
            v = parent[mate[v]];
        }
        for (int v = b;;) {
            v = base[v];
            if (seen[v]) return v;
            v = parent[mate[v]];
        }
    };

    auto mark_path = [&](int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = true;
            blossom[base[mate[v]]] = true;
            parent[v] = child;
            child = mate[v];
            v = parent[mate[v]];
        }
    };

    auto find_path = [&](int root) -> int {
        std::fill(used.begin(), used.end(), false);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj[v]) {
                if (base[v] == base[to] || mate[v] == to) continue;
                if (to == root || (mate[to] != -1 && parent[mate[to]] != -1)) {
                    // odd cycle: contract the blossom
                    int curbase = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), false);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = curbase;
                            if (!used[i]) {
                                used[i] = true;
                                q.push(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (mate[to] == -1) return to;  // augmenting path found
                    used[mate[to]] = true;
                    q.push(mate[to]);
                }
            }
        }
        return -1;
    };

    for (int v = 0; v < n; ++v) {
        if (mate[v] != -1) continue;
        int u = find_path(v);
        if (u == -1) continue;
        while (u != -1) {
            int pv = parent[u], ppv = mate[pv];
            mate[u] = pv;
            mate[pv] = u;
            u = ppv;
        }
    }
    return mate;
}

std::vector<int> maximum_matching(const Graph& g) {
    std::vector<std::vector<int>> adj(g.n());
    for (auto [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return maximum_matching_core(g.n(), adj);
}

std::optional<std::vector<std::pair<int, int>>> perfect_matching(const Graph& g) {
    if (g.n() % 2 != 0) return std::nullopt;
    auto mate = maximum_matching(g);
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < g.n(); ++v) {
        if (mate[v] == -1) return std::nullopt;
        if (v < mate[v]) out.emplace_back(v, mate[v]);
    }
    return out;
}

}  // namespace tfl
