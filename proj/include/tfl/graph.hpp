#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tfl {

// Subset of vertices 0..63 with bitset semantics.
struct VertexSet {
    std::uint64_t bits = 0;

    VertexSet() = default;
    explicit VertexSet(std::uint64_t b) : bits(b) {}

    static VertexSet single(int v) { return VertexSet(std::uint64_t(1) << v); }
    static VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1);
    }

    bool contains(int v) const { return (bits >> v) & 1; }
    void add(int v) { bits |= std::uint64_t(1) << v; }
    void remove(int v) { bits &= ~(std::uint64_t(1) << v); }
    int size() const { return __builtin_popcountll(bits); }
    bool empty() const { return bits == 0; }
    int min_vertex() const { return __builtin_ctzll(bits); }

    VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
    VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
    VertexSet operator-(VertexSet o) const { return VertexSet(bits & ~o.bits); }
    bool operator==(const VertexSet&) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
        return out;
    }
};

// Immutable simple undirected graph on vertices 0..n-1, bitset adjacency rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, 0) {
        if (n < 0 || n > 64) throw std::invalid_argument("Graph: n out of range [0,64]");
    }
    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge_internal(u, v);
    }

    int n() const { return n_; }
    int m() const {
        int twice = 0;
        for (auto row : adj_) twice += __builtin_popcountll(row);
        return twice / 2;
    }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
    VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
    int degree(int v) const { return __builtin_popcountll(adj_[v]); }
    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }
    VertexSet vertices() const { return VertexSet::full(n_); }

    // Edges as (u,v) with u < v, in column order matching graph6 bit order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int v = 1; v < n_; ++v)
            for (int u = 0; u < v; ++u)
                if (adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    Graph with_edge(int u, int v) const {
        Graph g = *this;
        g.add_edge_internal(u, v);
        return g;
    }
    Graph without_edge(int u, int v) const {
        Graph g = *this;
        g.adj_[u] &= ~(std::uint64_t(1) << v);
        g.adj_[v] &= ~(std::uint64_t(1) << u);
        return g;
    }

    // Number of neighbors of v inside the set s.
    int degree_into(int v, VertexSet s) const {
        return __builtin_popcountll(adj_[v] & s.bits);
    }
    // Edge count between disjoint sets a and b.
    int edges_between(VertexSet a, VertexSet b) const {
        int c = 0;
        for (std::uint64_t x = a.bits; x; x &= x - 1)
            c += __builtin_popcountll(adj_[__builtin_ctzll(x)] & b.bits);
        return c;
    }

    bool is_complete() const {
        for (int v = 0; v < n_; ++v)
            if (degree(v) != n_ - 1) return false;
        return true;
    }
    bool is_independent(VertexSet s) const {
        for (std::uint64_t x = s.bits; x; x &= x - 1)
            if (adj_[__builtin_ctzll(x)] & s.bits) return false;
        return true;
    }

    bool operator==(const Graph&) const = default;

private:
    void add_edge_internal(int u, int v) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        adj_[u] |= std::uint64_t(1) << v;
        adj_[v] |= std::uint64_t(1) << u;
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Connected components of the subgraph induced on a ground set.
struct ComponentPartition {
    std::vector<VertexSet> parts;  // ordered by minimum vertex id
};

ComponentPartition components_of(const Graph& g, VertexSet ground);

// Count of components of the induced subgraph (no partition materialized).
int component_count(const Graph& g, VertexSet ground);

bool is_connected(const Graph& g);

// --- graph6 (short form, n <= 62) ---

struct Graph6Error : std::runtime_error {
    std::size_t offset;  // byte offset of the offending character
    Graph6Error(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

Graph parse_graph6(const std::string& line);
std::string write_graph6(const Graph& g);

// --- generators ---

enum class Family { complete, cycle, star, petersen, petersen_minus_vertex, complete_bipartite };

Graph generate(Family family, int p1 = 0, int p2 = 0);

Graph parse_family(const std::string& name);  // "K4", "C5", "petersen", ... for the CLI

}  // namespace tfl
