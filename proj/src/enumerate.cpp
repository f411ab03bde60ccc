#include "tfl/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tfl {

namespace {

inline int pair_bit(int u, int v) {  // u < v, column order
    return v * (v - 1) / 2 + u;
}

std::uint64_t edge_mask(const Graph& g) {
    std::uint64_t mask = 0;
    for (auto [u, v] : g.edges()) mask |= std::uint64_t(1) << pair_bit(u, v);
    return mask;
}

Graph from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if ((mask >> pair_bit(u, v)) & 1) g = g.with_edge(u, v);
    return g;
}

// bit-position remap tables for every permutation of n elements
std::vector<std::vector<int>> bit_maps(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> maps;
    do {
        std::vector<int> map(n * (n - 1) / 2);
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                int a = perm[u], b = perm[v];
                if (a > b) std::swap(a, b);
                map[pair_bit(u, v)] = pair_bit(a, b);
            }
        maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return maps;
}

std::uint64_t canon(std::uint64_t mask, const std::vector<std::vector<int>>& maps) {
    std::uint64_t best = ~std::uint64_t(0);
    for (const auto& map : maps) {
        std::uint64_t code = 0;
        for (std::uint64_t b = mask; b; b &= b - 1)
            code |= std::uint64_t(1) << map[__builtin_ctzll(b)];
        best = std::min(best, code);
    }
    return best;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    if (g.n() > 10) throw std::invalid_argument("canonical_code: n too large for n! canonization");
    if (g.n() <= 1) return 0;
    return canon(edge_mask(g), bit_maps(g.n()));
}

std::vector<Graph> enumerate_small(int n, bool connected_only) {
    if (n < 1 || n > 7)
        throw std::invalid_argument(
            "enumerate_small: only n in 1..7 supported; ingest an external corpus instead");

    // grow by one vertex at a time, canonizing at each level
    std::set<std::uint64_t> level{0};  // n = 1
    for (int k = 1; k < n; ++k) {
        auto maps = bit_maps(k + 1);
        std::set<std::uint64_t> next;
        for (std::uint64_t rep : level) {
            for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t(1) << k); ++nbrs) {
                std::uint64_t mask = rep;
                for (int u = 0; u < k; ++u)
                    if ((nbrs >> u) & 1) mask |= std::uint64_t(1) << pair_bit(u, k);
                next.insert(canon(mask, maps));
            }
        }
        level = std::move(next);
    }

    std::vector<Graph> out;
    for (std::uint64_t code : level) {
        Graph g = from_edge_mask(n, code);
        if (connected_only && !is_connected(g)) continue;
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace tfl
