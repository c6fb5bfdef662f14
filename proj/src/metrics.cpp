#include "rewire/metrics.hpp"

#include <algorithm>
#include <array>
#include <queue>

#include "rewire/intersect.hpp"

namespace rewire {

namespace {

std::uint64_t choose2(std::uint64_t d) { return d * (d - 1) / 2; }

} // namespace

std::uint64_t count_triangles(const Graph& g) {
    std::uint64_t sum = 0;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v : g.neighbors(u)) {
            if (v <= u)
                continue;
            sum += g.common_neighbor_count(u, v);
        }
    }
    return sum / 3;
}

std::uint64_t count_wedges(const Graph& g) {
    std::uint64_t sum = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        sum += choose2(g.degree(v));
    return sum;
}

double global_clustering(const Graph& g) {
    const std::uint64_t wedges = count_wedges(g);
    if (wedges == 0)
        throw undefined_metric_error(
            "global clustering undefined: graph has no wedges");
    return 3.0 * static_cast<double>(count_triangles(g)) /
           static_cast<double>(wedges);
}

LocalClustering local_clustering(const Graph& g, VertexId v) {
    const std::size_t d = g.degree(v);
    if (d < 2)
        return {0.0, true};
    // sum of |N(u,v)| over u ~ v counts each neighborhood edge twice
    std::uint64_t twice_edges = 0;
    for (VertexId u : g.neighbors(v))
        twice_edges += g.common_neighbor_count(u, v);
    return {static_cast<double>(twice_edges) /
                static_cast<double>(d * (d - 1)),
            false};
}

double average_local_clustering(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0)
        throw usage_error("average local clustering needs n >= 1");
    double sum = 0.0;
    for (VertexId v = 0; v < n; ++v)
        sum += local_clustering(g, v).value;
    return sum / static_cast<double>(n);
}

PathLengthStats average_path_length(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 2)
        throw usage_error("average path length needs n >= 2");
    std::uint64_t distance_sum = 0;
    std::uint64_t pairs = 0;
    std::vector<std::uint32_t> dist(n);
    std::vector<VertexId> frontier, next;
    for (VertexId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), UINT32_MAX);
        dist[s] = 0;
        frontier.clear();
        frontier.push_back(s);
        std::uint32_t level = 0;
        while (!frontier.empty()) {
            ++level;
            next.clear();
            for (VertexId v : frontier) {
                for (VertexId w : g.neighbors(v)) {
                    if (dist[w] == UINT32_MAX) {
                        dist[w] = level;
                        distance_sum += level;
                        ++pairs;
                        next.push_back(w);
                    }
                }
            }
            frontier.swap(next);
        }
    }
    if (pairs == 0)
        throw undefined_metric_error(
            "average path length undefined: no reachable pairs");
    return {static_cast<double>(distance_sum) / static_cast<double>(pairs),
            pairs};
}

double small_world_index(const Graph& g) {
    return global_clustering(g) / average_path_length(g).average;
}

TriangleWedgeCache TriangleWedgeCache::build(const Graph& g) {
    const std::size_t n = g.vertex_count();
    TriangleWedgeCache cache;
    cache.triangles_at_.assign(n, 0);
    cache.degrees_.resize(n);
    std::vector<VertexId> common;
    for (VertexId u = 0; u < n; ++u) {
        cache.degrees_[u] = g.degree(u);
        cache.total_wedges_ +=
            static_cast<std::int64_t>(choose2(g.degree(u)));
        for (VertexId v : g.neighbors(u)) {
            if (v <= u)
                continue;
            simd::intersect(g.neighbors(u), g.neighbors(v), common);
            // each triangle bumps the vertex opposite this edge exactly once
            for (VertexId w : common)
                ++cache.triangles_at_[w];
        }
    }
    std::int64_t sum = 0;
    for (std::int64_t t : cache.triangles_at_)
        sum += t;
    cache.total_triangles_ = sum / 3;
    cache.graph_revision_ = g.revision();
    return cache;
}

double TriangleWedgeCache::global_clustering() const {
    if (total_wedges_ == 0)
        throw undefined_metric_error(
            "global clustering undefined: graph has no wedges");
    return 3.0 * static_cast<double>(total_triangles_) /
           static_cast<double>(total_wedges_);
}

double TriangleWedgeCache::average_local_clustering() const {
    const std::size_t n = degrees_.size();
    if (n == 0)
        throw usage_error("average local clustering needs n >= 1");
    double sum = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        const std::uint64_t d = degrees_[v];
        if (d >= 2)
            sum += static_cast<double>(triangles_at_[v]) /
                   static_cast<double>(choose2(d));
    }
    return sum / static_cast<double>(n);
}

namespace {

bool shares_vertex(const VertexPair& p, const VertexPair& q) {
    return p.a == q.a || p.a == q.b || p.b == q.a || p.b == q.b;
}

void validate_move_shape(const Graph& g, const Move& mv) {
    const auto present = [&](const VertexPair& p) {
        return g.has_edge(p.a, p.b);
    };
    if (mv.kind == MoveKind::single_swing) {
        if (mv.removed.size() != 1 || mv.added.size() != 1)
            throw state_error("single swing must remove and add one edge");
        const VertexPair r = mv.removed[0], a = mv.added[0];
        int shared = (r.a == a.a) + (r.a == a.b) + (r.b == a.a) +
                     (r.b == a.b);
        if (shared != 1)
            throw state_error("swing pairs must share exactly one endpoint");
        if (!present(r))
            throw state_error("swing removes a missing edge");
        if (present(a))
            throw state_error("swing adds an existing edge");
    } else {
        if (mv.removed.size() != 2 || mv.added.size() != 2)
            throw state_error("double swap must remove and add two edges");
        if (shares_vertex(mv.removed[0], mv.removed[1]) ||
            shares_vertex(mv.added[0], mv.added[1]))
            throw state_error("double swap pairs must be vertex-disjoint");
        for (const VertexPair& r : mv.removed)
            if (!present(r))
                throw state_error("double swap removes a missing edge");
        for (const VertexPair& a : mv.added) {
            if (present(a))
                throw state_error("double swap adds an existing edge");
            if (a == mv.removed[0] || a == mv.removed[1])
                throw state_error("double swap re-adds a removed edge");
        }
        // both added pairs must stay inside the four swap vertices
        const std::array<VertexId, 4> verts = {
            mv.removed[0].a, mv.removed[0].b, mv.removed[1].a,
            mv.removed[1].b};
        for (const VertexPair& a : mv.added) {
            const auto in_verts = [&](VertexId v) {
                return std::find(verts.begin(), verts.end(), v) !=
                       verts.end();
            };
            if (!in_verts(a.a) || !in_verts(a.b))
                throw state_error("double swap adds an edge outside the "
                                  "four swapped vertices");
        }
    }
}

} // namespace

std::int64_t expected_delta_triangles(const Graph& g, const Move& mv) {
    std::int64_t delta = 0;
    for (const VertexPair& r : mv.removed)
        delta -= static_cast<std::int64_t>(g.common_neighbor_count(r.a, r.b));
    for (const VertexPair& a : mv.added) {
        std::int64_t gained =
            static_cast<std::int64_t>(g.common_neighbor_count(a.a, a.b));
        // a pre-move common neighbor does not survive if one of its edges
        // to the new pair is itself being removed
        for (const VertexPair& r : mv.removed) {
            VertexId w;
            if (r.a == a.a || r.a == a.b)
                w = r.b;
            else if (r.b == a.a || r.b == a.b)
                w = r.a;
            else
                continue;
            if (w != a.a && w != a.b && g.has_edge(w, a.a) &&
                g.has_edge(w, a.b))
                --gained;
        }
        delta += gained;
    }
    return delta;
}

std::int64_t expected_delta_wedges(const Graph& g, const Move& mv) {
    // net degree change per touched vertex, then wedge difference per vertex
    std::vector<std::pair<VertexId, std::int64_t>> deltas;
    const auto bump = [&](VertexId v, std::int64_t d) {
        for (auto& [u, acc] : deltas) {
            if (u == v) {
                acc += d;
                return;
            }
        }
        deltas.emplace_back(v, d);
    };
    for (const VertexPair& r : mv.removed) {
        bump(r.a, -1);
        bump(r.b, -1);
    }
    for (const VertexPair& a : mv.added) {
        bump(a.a, 1);
        bump(a.b, 1);
    }
    std::int64_t delta = 0;
    for (const auto& [v, d] : deltas) {
        const auto before = static_cast<std::int64_t>(g.degree(v));
        const std::int64_t after = before + d;
        delta += after * (after - 1) / 2 - before * (before - 1) / 2;
    }
    return delta;
}

void TriangleWedgeCache::remove_edge_step(Graph& g, VertexId u, VertexId v) {
    total_wedges_ -= static_cast<std::int64_t>(degrees_[u] - 1) +
                     static_cast<std::int64_t>(degrees_[v] - 1);
    std::vector<VertexId> common;
    simd::intersect(g.neighbors(u), g.neighbors(v), common);
    for (VertexId w : common)
        --triangles_at_[w];
    const auto t = static_cast<std::int64_t>(common.size());
    triangles_at_[u] -= t;
    triangles_at_[v] -= t;
    total_triangles_ -= t;
    g.remove_edge(u, v);
    --degrees_[u];
    --degrees_[v];
}

void TriangleWedgeCache::add_edge_step(Graph& g, VertexId u, VertexId v) {
    total_wedges_ += static_cast<std::int64_t>(degrees_[u]) +
                     static_cast<std::int64_t>(degrees_[v]);
    std::vector<VertexId> common;
    simd::intersect(g.neighbors(u), g.neighbors(v), common);
    for (VertexId w : common)
        ++triangles_at_[w];
    const auto t = static_cast<std::int64_t>(common.size());
    triangles_at_[u] += t;
    triangles_at_[v] += t;
    total_triangles_ += t;
    g.add_edge(u, v);
    ++degrees_[u];
    ++degrees_[v];
}

void TriangleWedgeCache::apply_move(Graph& g, const Move& mv) {
    if (!consistent_with(g))
        throw state_error("cache is out of sync with the graph");
    validate_move_shape(g, mv);
    if (expected_delta_triangles(g, mv) != mv.delta_triangles ||
        expected_delta_wedges(g, mv) != mv.delta_wedges)
        throw state_error("stale move: deltas do not match current graph");
    for (const VertexPair& r : mv.removed)
        remove_edge_step(g, r.a, r.b);
    for (const VertexPair& a : mv.added)
        add_edge_step(g, a.a, a.b);
    graph_revision_ = g.revision();
}

} // namespace rewire
