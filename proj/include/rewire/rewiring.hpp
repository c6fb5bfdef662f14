#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "rewire/graph.hpp"
#include "rewire/metrics.hpp"
#include "rewire/move.hpp"
#include "rewire/rng.hpp"
#include "rewire/trajectory.hpp"

namespace rewire {

enum class PolicyMode {
    greedy,        // best doorway first, deterministic tie-breaks
    probabilistic, // doorway sampled proportionally to its quality
    uniform_random,
};

struct Policy {
    PolicyMode mode = PolicyMode::greedy;
    std::uint64_t seed = 0;
};

enum class Algorithm {
    swing_toward_best,
    swing_away_from_worst,
    degree_preserving,
};

struct RewireConfig {
    Algorithm algorithm = Algorithm::swing_toward_best;
    Policy policy;
    std::optional<std::uint64_t> max_steps;
    bool forbid_disconnect = false;
    std::uint64_t snapshot_every = 100; // cadence of path-length metrics
    // Scope of the "eliminate from consideration" doorway set: when true the
    // set persists for the whole run (a doorway that failed once is never
    // retried); when false it is cleared after every accepted move.
    bool persistent_exclusions = true;
};

// Doorways eliminated from consideration: abandoned by a proposal scan or
// vetoed as disconnecting under forbid_disconnect.
class ExclusionSet {
public:
    bool contains(const VertexPair& p) const {
        return keys_.count(p.packed()) != 0;
    }
    void add(const VertexPair& p) { keys_.insert(p.packed()); }
    void clear() { keys_.clear(); }
    std::size_t size() const { return keys_.size(); }

private:
    std::unordered_set<std::uint64_t> keys_;
};

// Theorem-style legality test for rewiring edge {x,v} to {x,y}:
// |N(x,y)| > |N(x,v)| and d_v > d_y, counts and degrees pre-move.
// Preconditions ({x,v} an edge, {x,y} a nonedge, distinct ids) are enforced.
bool legal_single_swing(const Graph& g, VertexId x, VertexId v, VertexId y);

// The three proposers. Each scans doorways in policy order and returns the
// first move whose exact triangle gain is strictly positive (plus the degree
// condition for the swing variants), or nullopt once every doorway has been
// exhausted — the fixed-point certificate. Doorways the scan abandons are
// recorded in `exclusions` so callers can keep them out of later proposals.
std::optional<Move> propose_swing_toward_best(const Graph& g,
                                              const TriangleWedgeCache& cache,
                                              PolicyMode mode, Rng& rng,
                                              ExclusionSet& exclusions);
std::optional<Move> propose_swing_away_from_worst(
    const Graph& g, const TriangleWedgeCache& cache, PolicyMode mode,
    Rng& rng, ExclusionSet& exclusions);
std::optional<Move> propose_degree_preserving(const Graph& g,
                                              const TriangleWedgeCache& cache,
                                              PolicyMode mode, Rng& rng,
                                              ExclusionSet& exclusions);

std::optional<Move> propose(Algorithm algorithm, const Graph& g,
                            const TriangleWedgeCache& cache, PolicyMode mode,
                            Rng& rng, ExclusionSet& exclusions);

enum class ApplyResult {
    applied,
    rejected_disconnect,
};

// Applies mv to (g, cache) atomically. With forbid_disconnect, a move that
// would raise the component count is vetoed instead: the doorway is recorded
// in exclusions and the graph is left untouched.
ApplyResult apply_move(Graph& g, TriangleWedgeCache& cache, const Move& mv,
                       bool forbid_disconnect, ExclusionSet& exclusions);

struct RewireResult {
    std::vector<TrajectoryRecord> trajectory;
    std::uint64_t total_moves = 0;
    double edges_rewired_fraction = 0.0;
    bool reached_fixed_point = false; // false when stopped by max_steps
};

// Propose/apply until fixed point or max_steps. Emits one trajectory record
// per accepted move (plus step 0); path-length metrics are filled at step 0,
// every snapshot_every-th move, and at termination.
RewireResult run_rewiring(Graph& g, const RewireConfig& config);

} // namespace rewire
