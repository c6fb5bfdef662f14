#pragma once

#include <cstdint>
#include <vector>

#include "rewire/graph.hpp"

namespace rewire {

// Unordered vertex pair stored canonically (a < b).
struct VertexPair {
    VertexId a = 0;
    VertexId b = 0;

    VertexPair() = default;
    VertexPair(VertexId x, VertexId y) : a(x < y ? x : y), b(x < y ? y : x) {}

    bool operator==(const VertexPair&) const = default;
    auto operator<=>(const VertexPair&) const = default;

    std::uint64_t packed() const {
        return (static_cast<std::uint64_t>(a) << 32) | b;
    }
};

enum class MoveKind {
    single_swing, // remove one edge, add one edge sharing an endpoint
    double_swap,  // remove two independent edges, add two; degrees preserved
};

// One rewiring action, with the exact metric deltas it realizes.
// Invariants: delta_triangles > 0; single swings additionally have
// delta_wedges <= 0; double swaps have delta_wedges == 0.
struct Move {
    MoveKind kind = MoveKind::single_swing;
    std::vector<VertexPair> removed;
    std::vector<VertexPair> added;
    std::int64_t delta_triangles = 0;
    std::int64_t delta_wedges = 0;
    // The step-1 selection unit (a nonedge for the toward/degree-preserving
    // proposers, an edge for away-from-worst); what gets excluded when a
    // disconnecting move is vetoed.
    VertexPair doorway;
};

} // namespace rewire
