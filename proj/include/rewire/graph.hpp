#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rewire/errors.hpp"

namespace rewire {

using VertexId = std::uint32_t;

// Undirected simple graph over dense vertex ids 0..n-1. Adjacency lists are
// kept sorted ascending so common-neighbor queries are ordered-set
// intersections. Invariants: no self-loops, symmetric adjacency, no
// duplicates, edge_count == sum(degrees)/2.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adjacency_(n) {}

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::size_t degree(VertexId v) const {
        require_vertex(v);
        return adjacency_[v].size();
    }

    std::span<const VertexId> neighbors(VertexId v) const {
        require_vertex(v);
        return adjacency_[v];
    }

    bool has_edge(VertexId u, VertexId v) const;

    // Add or remove edge {u,v}. Adding a present edge or removing an absent
    // one is a state_error; u == v or out-of-range ids are usage_errors.
    void add_edge(VertexId u, VertexId v);
    void remove_edge(VertexId u, VertexId v);
    void set_edge(VertexId u, VertexId v, bool present);

    // N(x) ∩ N(y); excludes x and y by the no-self-loop invariant.
    std::vector<VertexId> common_neighbors(VertexId x, VertexId y) const;
    std::size_t common_neighbor_count(VertexId x, VertexId y) const;

    // Bumped on every mutation; used by caches to detect staleness.
    std::uint64_t revision() const { return revision_; }

    bool operator==(const Graph& other) const {
        return adjacency_ == other.adjacency_;
    }

    // Full-scan invariant check (test support); throws state_error.
    void check_invariants() const;

private:
    void require_vertex(VertexId v) const {
        if (v >= adjacency_.size())
            throw usage_error("vertex id out of range: " + std::to_string(v));
    }
    void require_pair(VertexId u, VertexId v) const {
        require_vertex(u);
        require_vertex(v);
        if (u == v)
            throw usage_error("self-loop rejected: vertex " +
                              std::to_string(u));
    }

    std::vector<std::vector<VertexId>> adjacency_;
    std::size_t edge_count_ = 0;
    std::uint64_t revision_ = 0;
};

struct ComponentInfo {
    std::size_t count = 0;
    std::vector<std::uint32_t> label; // vertex -> component index
    std::vector<std::size_t> sizes;   // component index -> vertex count
};

// BFS component decomposition. Empty graph: 0 components.
ComponentInfo connected_components(const Graph& g);

// True iff at most one component (empty graph is connected by convention).
bool is_connected(const Graph& g);

} // namespace rewire
