#pragma once

#include <cstdint>
#include <vector>

#include "rewire/graph.hpp"
#include "rewire/move.hpp"

namespace rewire {

// N_t(G): exact triangle count, summing |N(x,y)| over edges and dividing
// by three.
std::uint64_t count_triangles(const Graph& g);

// N_p(G): number of length-two paths, sum over vertices of C(d,2).
std::uint64_t count_wedges(const Graph& g);

// C(G) = 3*N_t/N_p. Undefined (throws) when the graph has no wedges.
double global_clustering(const Graph& g);

struct LocalClustering {
    double value = 0.0;
    bool degenerate = false; // degree < 2: value is the 0 convention
};

// c_v = 2*e(N(v)) / (d_v*(d_v-1)).
LocalClustering local_clustering(const Graph& g, VertexId v);

// c(G): mean of c_v over all vertices, degenerate vertices contributing 0.
double average_local_clustering(const Graph& g);

struct PathLengthStats {
    double average = 0.0;            // mean over ordered reachable pairs
    std::uint64_t reachable_pairs = 0;
};

// BFS from every vertex; throws usage_error for n < 2 and
// undefined_metric_error when no pair is reachable.
PathLengthStats average_path_length(const Graph& g);

// C(G) / average path length.
double small_world_index(const Graph& g);

// Per-vertex triangle participation plus global triangle/wedge totals,
// maintained incrementally move-by-move so a full recount happens only once.
class TriangleWedgeCache {
public:
    static TriangleWedgeCache build(const Graph& g);

    std::uint64_t total_triangles() const {
        return static_cast<std::uint64_t>(total_triangles_);
    }
    std::uint64_t total_wedges() const {
        return static_cast<std::uint64_t>(total_wedges_);
    }
    std::uint64_t triangles_at(VertexId v) const {
        return static_cast<std::uint64_t>(triangles_at_.at(v));
    }
    std::size_t degree(VertexId v) const { return degrees_.at(v); }
    std::size_t vertex_count() const { return degrees_.size(); }

    // Revision of the graph this cache was last synchronized with.
    std::uint64_t graph_revision() const { return graph_revision_; }
    bool consistent_with(const Graph& g) const {
        return graph_revision_ == g.revision() &&
               degrees_.size() == g.vertex_count();
    }

    double global_clustering() const;
    double average_local_clustering() const;

    // Applies mv to graph and cache as one atomic step: validates the move
    // against the current graph (structure and exact deltas), then performs
    // the edge mutations with neighborhood-local cache updates. Throws
    // state_error for stale/illegal moves or a cache/graph mismatch, leaving
    // both untouched.
    void apply_move(Graph& g, const Move& mv);

    bool operator==(const TriangleWedgeCache&) const = default;

private:
    void remove_edge_step(Graph& g, VertexId u, VertexId v);
    void add_edge_step(Graph& g, VertexId u, VertexId v);

    std::vector<std::int64_t> triangles_at_;
    std::vector<std::size_t> degrees_;
    std::int64_t total_triangles_ = 0;
    std::int64_t total_wedges_ = 0;
    std::uint64_t graph_revision_ = 0;
};

// Exact triangle/wedge deltas a move would realize on g (removals applied
// before additions). Used for move validation and by the proposers.
std::int64_t expected_delta_triangles(const Graph& g, const Move& mv);
std::int64_t expected_delta_wedges(const Graph& g, const Move& mv);

} // namespace rewire
