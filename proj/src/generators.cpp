#include "rewire/generators.hpp"

#include <numeric>
#include <vector>

#include "rewire/rng.hpp"

namespace rewire {

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0)
        throw usage_error("erdos_renyi: p must be in [0,1]");
    Rng rng(seed);
    Graph g(n);
    for (VertexId x = 0; x + 1 < n; ++x)
        for (VertexId y = x + 1; y < n; ++y)
            if (rng.bernoulli(p))
                g.add_edge(x, y);
    return g;
}

Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (m < 1 || m >= n)
        throw usage_error("barabasi_albert: need 1 <= m < n");
    Rng rng(seed);
    Graph g(n);
    // endpoint multiset; sampling an entry uniformly is degree-proportional
    std::vector<VertexId> endpoints;
    endpoints.reserve(2 * ((m + 1) * m / 2 + (n - m - 1) * m));
    for (VertexId x = 0; x < m + 1; ++x) {
        for (VertexId y = x + 1; y < m + 1; ++y) {
            g.add_edge(x, y);
            endpoints.push_back(x);
            endpoints.push_back(y);
        }
    }
    std::vector<VertexId> targets;
    for (VertexId t = static_cast<VertexId>(m + 1); t < n; ++t) {
        targets.clear();
        while (targets.size() < m) {
            const VertexId pick = endpoints[rng.below(endpoints.size())];
            if (std::find(targets.begin(), targets.end(), pick) ==
                targets.end())
                targets.push_back(pick);
        }
        for (VertexId w : targets) {
            g.add_edge(t, w);
            endpoints.push_back(t);
            endpoints.push_back(w);
        }
    }
    return g;
}

Graph ring_lattice(std::size_t n, std::size_t k) {
    if (k < 1 || 2 * k >= n)
        throw usage_error("ring_lattice: need 1 <= k < n/2");
    Graph g(n);
    for (VertexId i = 0; i < n; ++i)
        for (std::size_t offset = 1; offset <= k; ++offset)
            g.add_edge(i, static_cast<VertexId>((i + offset) % n));
    return g;
}

Graph randomize_edges(const Graph& g, std::size_t count, std::uint64_t seed) {
    if (count > g.edge_count())
        throw usage_error("randomize_edges: count exceeds edge count");
    Rng rng(seed);
    Graph out = g;
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(g.edge_count());
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v : g.neighbors(u))
            if (v > u)
                edges.emplace_back(u, v);
    // partial Fisher-Yates: a uniform sample of `count` distinct edges
    const std::size_t n = g.vertex_count();
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + rng.below(edges.size() - i);
        std::swap(edges[i], edges[j]);
        auto [u, v] = edges[i];
        if (rng.below(2) == 1)
            std::swap(u, v); // u is the kept endpoint
        if (out.degree(u) + 1 >= n)
            continue; // no valid target exists; edge stays in place
        VertexId r;
        do {
            r = static_cast<VertexId>(rng.below(n));
        } while (r == u || r == v || out.has_edge(u, r));
        out.remove_edge(u, v);
        out.add_edge(u, r);
    }
    return out;
}

} // namespace rewire
