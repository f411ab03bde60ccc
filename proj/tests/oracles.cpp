#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace oracle {

std::string encode_graph6(const tfl::Graph& g) {
    int n = g.n();
    std::string bits;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) bits.push_back(g.adjacent(u, v) ? '1' : '0');
    while (bits.size() % 6 != 0) bits.push_back('0');
    std::string out(1, char(63 + n));
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int val = 0;
        for (int j = 0; j < 6; ++j) val = val * 2 + (bits[i + j] - '0');
        out.push_back(char(63 + val));
    }
    return out;
}

namespace {

bool two_factor_rec(const std::vector<std::pair<int, int>>& edges, std::size_t idx,
                    std::vector<int>& deg, std::vector<int>& remaining) {
    if (idx == edges.size()) {
        for (int d : deg)
            if (d != 2) return false;
        return true;
    }
    auto [u, v] = edges[idx];
    --remaining[u];
    --remaining[v];
    bool ok = false;
    // leave the edge out
    if (deg[u] + remaining[u] >= 2 && deg[v] + remaining[v] >= 2)
        ok = two_factor_rec(edges, idx + 1, deg, remaining);
    // take it
    if (!ok && deg[u] < 2 && deg[v] < 2) {
        ++deg[u];
        ++deg[v];
        ok = two_factor_rec(edges, idx + 1, deg, remaining);
        --deg[u];
        --deg[v];
    }
    ++remaining[u];
    ++remaining[v];
    return ok;
}

}  // namespace

bool has_two_factor(const tfl::Graph& g) {
    if (g.n() < 3) return false;
    auto edges = g.edges();
    std::vector<int> deg(g.n(), 0), remaining(g.n(), 0);
    for (auto [u, v] : edges) {
        ++remaining[u];
        ++remaining[v];
    }
    return two_factor_rec(edges, 0, deg, remaining);
}

namespace {

bool matching_rec(const tfl::Graph& g, std::vector<bool>& used, int from) {
    int v = from;
    while (v < g.n() && used[v]) ++v;
    if (v == g.n()) return true;
    used[v] = true;
    for (int w = v + 1; w < g.n(); ++w) {
        if (used[w] || !g.adjacent(v, w)) continue;
        used[w] = true;
        if (matching_rec(g, used, v + 1)) return true;
        used[w] = false;
    }
    used[v] = false;
    return false;
}

}  // namespace

bool has_perfect_matching(const tfl::Graph& g) {
    if (g.n() % 2 != 0) return false;
    std::vector<bool> used(g.n(), false);
    return matching_rec(g, used, 0);
}

namespace {

// component count via explicit BFS over edge lists
int components_on(const tfl::Graph& g, const std::vector<bool>& alive) {
    int n = g.n(), count = 0;
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (!alive[s] || seen[s]) continue;
        ++count;
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w = 0; w < n; ++w)
                if (alive[w] && !seen[w] && g.adjacent(v, w)) {
                    seen[w] = true;
                    q.push(w);
                }
        }
    }
    return count;
}

}  // namespace

ToughnessValue toughness(const tfl::Graph& g) {
    int n = g.n();
    bool complete = true;
    for (int v = 0; v < n && complete; ++v)
        if (g.degree(v) != n - 1) complete = false;
    if (complete) return {true, {}};

    bool found = false;
    tfl::Rational best{0};
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<bool> alive(n);
        int cut_size = 0;
        for (int v = 0; v < n; ++v) {
            alive[v] = !((mask >> v) & 1);
            if (!alive[v]) ++cut_size;
        }
        int cc = components_on(g, alive);
        if (cc < 2) continue;
        tfl::Rational ratio(cut_size, cc);
        if (!found || ratio < best) {
            found = true;
            best = ratio;
        }
    }
    return {false, best};
}

int delta_st(const tfl::Graph& g, std::vector<int> s, std::vector<int> t) {
    int n = g.n();
    std::vector<bool> in_s(n, false), in_t(n, false), alive(n, true);
    for (int v : s) in_s[v] = true;
    for (int v : t) in_t[v] = true;
    for (int v = 0; v < n; ++v) alive[v] = !in_s[v] && !in_t[v];

    // components of G - (S u T) and their edge counts to T
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int v = 0; v < n; ++v) {
        if (!alive[v] || comp[v] != -1) continue;
        std::queue<int> q;
        q.push(v);
        comp[v] = ncomp;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int w = 0; w < n; ++w)
                if (alive[w] && comp[w] == -1 && g.adjacent(x, w)) {
                    comp[w] = ncomp;
                    q.push(w);
                }
        }
        ++ncomp;
    }
    std::vector<int> to_t(ncomp, 0);
    for (int v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        for (int y : t)
            if (g.adjacent(v, y)) ++to_t[comp[v]];
    }
    int h = 0;
    for (int c : to_t)
        if (c % 2 == 1) ++h;

    int deg_sum = 0;
    for (int y : t)
        for (int w = 0; w < n; ++w)
            if (!in_s[w] && g.adjacent(y, w)) ++deg_sum;

    return 2 * int(s.size()) - 2 * int(t.size()) + deg_sum - h;
}

bool has_barrier(const tfl::Graph& g) {
    int n = g.n();
    std::vector<int> assign(n, 0);  // 0 = neither, 1 = S, 2 = T
    while (true) {
        std::vector<int> s, t;
        for (int v = 0; v < n; ++v) {
            if (assign[v] == 1) s.push_back(v);
            if (assign[v] == 2) t.push_back(v);
        }
        if (delta_st(g, s, t) <= -2) return true;
        int i = 0;
        while (i < n && assign[i] == 2) assign[i++] = 0;
        if (i == n) return false;
        ++assign[i];
    }
}

namespace {

// Canonical color order (a fresh color may only follow all smaller ones),
// which kills the k! palette symmetry without touching the search otherwise.
bool coloring_rec(const std::vector<std::pair<int, int>>& edges, std::size_t idx, int k,
                  int max_used, std::vector<std::vector<bool>>& used) {
    if (idx == edges.size()) return true;
    auto [u, v] = edges[idx];
    int top = std::min(k, max_used + 1);
    for (int c = 1; c <= top; ++c) {
        if (used[u][c] || used[v][c]) continue;
        used[u][c] = used[v][c] = true;
        if (coloring_rec(edges, idx + 1, k, std::max(max_used, c), used)) return true;
        used[u][c] = used[v][c] = false;
    }
    return false;
}

}  // namespace

bool k_edge_colorable(const tfl::Graph& g, int k) {
    auto edges = g.edges();
    std::vector<std::vector<bool>> used(g.n(), std::vector<bool>(k + 1, false));
    return coloring_rec(edges, 0, k, 0, used);
}

int chi_prime(const tfl::Graph& g) {
    if (g.m() == 0) return 0;
    int delta = g.max_degree();
    return k_edge_colorable(g, delta) ? delta : delta + 1;
}

int girth(const tfl::Graph& g) {
    int best = -1;
    for (int s = 0; s < g.n(); ++s) {
        std::vector<int> dist(g.n(), -1), parent(g.n(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w = 0; w < g.n(); ++w) {
                if (!g.adjacent(v, w)) continue;
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (w != parent[v]) {
                    int len = dist[v] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

bool isomorphic(const tfl::Graph& a, const tfl::Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    std::vector<int> perm(a.n());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < a.n() && ok; ++u)
            for (int v = u + 1; v < a.n() && ok; ++v)
                if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace oracle
