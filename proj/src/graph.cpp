#include "tfl/graph.hpp"

#include <algorithm>
#include <cctype>

namespace tfl {

ComponentPartition components_of(const Graph& g, VertexSet ground) {
    ComponentPartition out;
    std::uint64_t remaining = ground.bits;
    while (remaining) {
        int start = __builtin_ctzll(remaining);
        std::uint64_t comp = std::uint64_t(1) << start;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t x = frontier; x; x &= x - 1)
                next |= g.neighbors(__builtin_ctzll(x)).bits;
            next &= remaining & ~comp;
            comp |= next;
            frontier = next;
        }
        out.parts.push_back(VertexSet(comp));
        remaining &= ~comp;
    }
    return out;
}

int component_count(const Graph& g, VertexSet ground) {
    int count = 0;
    std::uint64_t remaining = ground.bits;
    while (remaining) {
        int start = __builtin_ctzll(remaining);
        std::uint64_t comp = std::uint64_t(1) << start;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t x = frontier; x; x &= x - 1)
                next |= g.neighbors(__builtin_ctzll(x)).bits;
            next &= remaining & ~comp;
            comp |= next;
            frontier = next;
        }
        ++count;
        remaining &= ~comp;
    }
    return count;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    return component_count(g, g.vertices()) == 1;
}

Graph parse_graph6(const std::string& line) {
    if (line.empty()) throw Graph6Error("empty graph6 line", 0);
    for (std::size_t i = 0; i < line.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw Graph6Error("character outside graph6 range 63..126", i);
    }
    int n = line[0] - 63;
    if (n > 62) throw Graph6Error("long-form size byte unsupported (n > 62)", 0);
    int nbits = n * (n - 1) / 2;
    std::size_t expect = 1 + (nbits + 5) / 6;
    if (line.size() != expect)
        throw Graph6Error("payload length mismatch: expected " + std::to_string(expect) +
                              " bytes, got " + std::to_string(line.size()),
                          line.size() < expect ? line.size() : expect);
    Graph g(n);
    int bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int group = line[1 + bit / 6] - 63;
            if (group & (1 << (5 - bit % 6))) g = g.with_edge(u, v);
        }
    }
    // trailing pad bits must be zero for a canonical encoding
    for (int b = nbits; b < 6 * int((nbits + 5) / 6); ++b) {
        int group = line[1 + b / 6] - 63;
        if (group & (1 << (5 - b % 6)))
            throw Graph6Error("nonzero padding bit", 1 + b / 6);
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    int n = g.n();
    if (n > 62) throw std::invalid_argument("write_graph6: n > 62 unsupported (short form only)");
    std::string out(1, char(63 + n));
    int nbits = n * (n - 1) / 2;
    int ngroups = (nbits + 5) / 6;
    std::vector<int> groups(ngroups, 0);
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.adjacent(u, v)) groups[bit / 6] |= 1 << (5 - bit % 6);
    for (int grp : groups) out.push_back(char(63 + grp));
    return out;
}

Graph generate(Family family, int p1, int p2) {
    switch (family) {
        case Family::complete: {
            if (p1 < 0) throw std::invalid_argument("complete: n >= 0 required");
            Graph g(p1);
            for (int v = 1; v < p1; ++v)
                for (int u = 0; u < v; ++u) g = g.with_edge(u, v);
            return g;
        }
        case Family::cycle: {
            if (p1 < 3) throw std::invalid_argument("cycle: n >= 3 required");
            Graph g(p1);
            for (int v = 0; v < p1; ++v) g = g.with_edge(v, (v + 1) % p1);
            return g;
        }
        case Family::star: {
            if (p1 < 1) throw std::invalid_argument("star: leaf count >= 1 required");
            Graph g(p1 + 1);
            for (int v = 1; v <= p1; ++v) g = g.with_edge(0, v);
            return g;
        }
        case Family::petersen: {
            Graph g(10);
            for (int i = 0; i < 5; ++i) {
                g = g.with_edge(i, (i + 1) % 5);          // outer 5-cycle
                g = g.with_edge(5 + i, 5 + (i + 2) % 5);  // inner 5-cycle with step 2
                g = g.with_edge(i, 5 + i);                // spokes
            }
            return g;
        }
        case Family::petersen_minus_vertex: {
            Graph p = generate(Family::petersen);
            Graph g(9);  // drop vertex 9, keep labels 0..8
            for (auto [u, v] : p.edges())
                if (u != 9 && v != 9) g = g.with_edge(u, v);
            return g;
        }
        case Family::complete_bipartite: {
            if (p1 < 0 || p2 < 0) throw std::invalid_argument("complete_bipartite: sizes >= 0 required");
            Graph g(p1 + p2);
            for (int u = 0; u < p1; ++u)
                for (int v = p1; v < p1 + p2; ++v) g = g.with_edge(u, v);
            return g;
        }
    }
    throw std::invalid_argument("unknown family");
}

Graph parse_family(const std::string& name) {
    if (name == "petersen") return generate(Family::petersen);
    if (name == "petersen-v" || name == "petersen_minus_vertex")
        return generate(Family::petersen_minus_vertex);
    if (name.size() >= 2 && (name[0] == 'K' || name[0] == 'C' || name[0] == 'S')) {
        std::string rest = name.substr(1);
        auto comma = rest.find(',');
        if (name[0] == 'K' && comma != std::string::npos)
            return generate(Family::complete_bipartite, std::stoi(rest.substr(0, comma)),
                            std::stoi(rest.substr(comma + 1)));
        int p = std::stoi(rest);
        if (name[0] == 'K') return generate(Family::complete, p);
        if (name[0] == 'C') return generate(Family::cycle, p);
        return generate(Family::star, p);
    }
    throw std::invalid_argument("unknown graph family: " + name);
}

}  // namespace tfl
