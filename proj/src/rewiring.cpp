#include "rewire/rewiring.hpp"

#include <algorithm>
#include <unordered_set>

namespace rewire {

namespace {

struct Candidate {
    VertexPair pair;
    std::size_t count = 0; // |N(a,b)| of the pair
};

// Doorway iteration in policy order, consuming candidates without
// replacement so an abandoned doorway is not retried within one proposal.
class CandidateQueue {
public:
    enum class GreedyOrder { max_count_first, min_count_first };
    enum class Weighting { by_count, inverse_count, uniform };

    CandidateQueue(std::vector<Candidate> candidates, PolicyMode mode,
                   GreedyOrder order, Weighting weighting, Rng& rng)
        : candidates_(std::move(candidates)), mode_(mode), rng_(rng) {
        if (mode_ == PolicyMode::greedy) {
            std::sort(candidates_.begin(), candidates_.end(),
                      [order](const Candidate& lhs, const Candidate& rhs) {
                          if (lhs.count != rhs.count)
                              return order == GreedyOrder::max_count_first
                                         ? lhs.count > rhs.count
                                         : lhs.count < rhs.count;
                          return lhs.pair < rhs.pair;
                      });
        } else {
            weights_.reserve(candidates_.size());
            for (const Candidate& c : candidates_) {
                double w = 1.0;
                if (mode_ == PolicyMode::probabilistic)
                    w = weighting == Weighting::inverse_count
                            ? 1.0 / (1.0 + static_cast<double>(c.count))
                            : static_cast<double>(c.count);
                weights_.push_back(w);
                total_weight_ += w;
            }
        }
    }

    std::optional<Candidate> next() {
        if (mode_ == PolicyMode::greedy) {
            if (pos_ == candidates_.size())
                return std::nullopt;
            return candidates_[pos_++];
        }
        if (candidates_.empty())
            return std::nullopt;
        std::size_t pick = candidates_.size() - 1;
        if (mode_ == PolicyMode::uniform_random) {
            pick = static_cast<std::size_t>(rng_.below(candidates_.size()));
        } else {
            const double target = rng_.unit() * total_weight_;
            double acc = 0.0;
            for (std::size_t i = 0; i < candidates_.size(); ++i) {
                acc += weights_[i];
                if (target < acc) {
                    pick = i;
                    break;
                }
            }
        }
        const Candidate chosen = candidates_[pick];
        if (mode_ == PolicyMode::probabilistic) {
            total_weight_ -= weights_[pick];
            weights_[pick] = weights_.back();
            weights_.pop_back();
        }
        candidates_[pick] = candidates_.back();
        candidates_.pop_back();
        return chosen;
    }

private:
    std::vector<Candidate> candidates_;
    std::vector<double> weights_;
    double total_weight_ = 0.0;
    PolicyMode mode_;
    Rng& rng_;
    std::size_t pos_ = 0;
};

void require_cache(const Graph& g, const TriangleWedgeCache& cache) {
    if (!cache.consistent_with(g))
        throw state_error("cache is out of sync with the graph");
}

// All nonedges {x,y} with |N(x,y)| >= 1 (pairs that close no triangle admit
// no legal move); skips excluded doorways.
std::vector<Candidate> nonedge_doorways(const Graph& g,
                                        const ExclusionSet& exclusions) {
    std::vector<Candidate> out;
    const auto n = static_cast<VertexId>(g.vertex_count());
    for (VertexId x = 0; x < n; ++x) {
        const auto row = g.neighbors(x);
        std::size_t i = 0;
        while (i < row.size() && row[i] <= x)
            ++i;
        for (VertexId y = x + 1; y < n; ++y) {
            if (i < row.size() && row[i] == y) {
                ++i; // {x,y} is an edge
                continue;
            }
            const VertexPair p(x, y);
            if (exclusions.contains(p))
                continue;
            const std::size_t count = g.common_neighbor_count(x, y);
            if (count >= 1)
                out.push_back({p, count});
        }
    }
    return out;
}

std::vector<Candidate> edge_doorways(const Graph& g,
                                     const ExclusionSet& exclusions) {
    std::vector<Candidate> out;
    out.reserve(g.edge_count());
    const auto n = static_cast<VertexId>(g.vertex_count());
    for (VertexId x = 0; x < n; ++x) {
        for (VertexId v : g.neighbors(x)) {
            if (v <= x)
                continue;
            const VertexPair p(x, v);
            if (exclusions.contains(p))
                continue;
            out.push_back({p, g.common_neighbor_count(x, v)});
        }
    }
    return out;
}

struct SwingCandidate {
    VertexId vertex = 0;      // the vertex considered for the swing
    std::size_t f = 0;        // its |N(.,.)| score per the scan rules
    std::size_t degree = 0;
    VertexPair removed;       // edge that would be removed
    VertexId gainer = 0;      // doorway endpoint that gains the edge
};

} // namespace

bool legal_single_swing(const Graph& g, VertexId x, VertexId v, VertexId y) {
    if (x == v || x == y || v == y)
        throw usage_error("legal_single_swing: vertices must be distinct");
    if (!g.has_edge(x, v))
        throw usage_error("legal_single_swing: {x,v} must be an edge");
    if (g.has_edge(x, y))
        throw usage_error("legal_single_swing: {x,y} must be a nonedge");
    return g.common_neighbor_count(x, y) > g.common_neighbor_count(x, v) &&
           g.degree(v) > g.degree(y);
}

std::optional<Move> propose_swing_toward_best(
    const Graph& g, const TriangleWedgeCache& cache, PolicyMode mode,
    Rng& rng, ExclusionSet& exclusions) {
    require_cache(g, cache);
    CandidateQueue doorways(nonedge_doorways(g, exclusions), mode,
                            CandidateQueue::GreedyOrder::max_count_first,
                            CandidateQueue::Weighting::by_count, rng);
    std::vector<SwingCandidate> swings;
    while (const auto doorway = doorways.next()) {
        const auto [x, y] = std::pair(doorway->pair.a, doorway->pair.b);
        const std::size_t cxy = doorway->count;
        swings.clear();
        for (VertexId v : g.neighbors(x)) {
            if (g.has_edge(v, y))
                continue;
            swings.push_back({v, g.common_neighbor_count(x, v), g.degree(v),
                              VertexPair(x, v), y});
        }
        for (VertexId v : g.neighbors(y)) {
            if (g.has_edge(v, x))
                continue;
            swings.push_back({v, g.common_neighbor_count(y, v), g.degree(v),
                              VertexPair(y, v), x});
        }
        // lowest f first; ties go to the highest degree, then lowest id
        std::sort(swings.begin(), swings.end(),
                  [](const SwingCandidate& lhs, const SwingCandidate& rhs) {
                      if (lhs.f != rhs.f)
                          return lhs.f < rhs.f;
                      if (lhs.degree != rhs.degree)
                          return lhs.degree > rhs.degree;
                      return lhs.vertex < rhs.vertex;
                  });
        for (const SwingCandidate& sc : swings) {
            if (sc.f >= cxy)
                break; // doorway abandoned once the best f is not strict
            if (g.degree(sc.vertex) > g.degree(sc.gainer)) {
                Move mv;
                mv.kind = MoveKind::single_swing;
                mv.removed = {sc.removed};
                mv.added = {doorway->pair};
                mv.delta_triangles = static_cast<std::int64_t>(cxy) -
                                     static_cast<std::int64_t>(sc.f);
                mv.delta_wedges =
                    static_cast<std::int64_t>(g.degree(sc.gainer)) -
                    static_cast<std::int64_t>(g.degree(sc.vertex)) + 1;
                mv.doorway = doorway->pair;
                return mv;
            }
        }
        exclusions.add(doorway->pair);
    }
    return std::nullopt;
}

std::optional<Move> propose_swing_away_from_worst(
    const Graph& g, const TriangleWedgeCache& cache, PolicyMode mode,
    Rng& rng, ExclusionSet& exclusions) {
    require_cache(g, cache);
    CandidateQueue doorways(edge_doorways(g, exclusions), mode,
                            CandidateQueue::GreedyOrder::min_count_first,
                            CandidateQueue::Weighting::inverse_count, rng);
    std::vector<SwingCandidate> targets;
    while (const auto doorway = doorways.next()) {
        const auto [a, b] = std::pair(doorway->pair.a, doorway->pair.b);
        const std::size_t cab = doorway->count;
        targets.clear();
        // targets adjacent to exactly one endpoint; the new edge pairs the
        // target with the endpoint it is not adjacent to
        for (VertexId y : g.neighbors(a)) {
            if (y == b || g.has_edge(y, b))
                continue;
            targets.push_back({y, g.common_neighbor_count(y, b), g.degree(y),
                               VertexPair(y, b), /*gainer=*/y});
        }
        for (VertexId y : g.neighbors(b)) {
            if (y == a || g.has_edge(y, a))
                continue;
            targets.push_back({y, g.common_neighbor_count(y, a), g.degree(y),
                               VertexPair(y, a), y});
        }
        // best doorway first: highest f, ties to the lowest degree (which
        // favors passing the degree test), then lowest id
        std::sort(targets.begin(), targets.end(),
                  [](const SwingCandidate& lhs, const SwingCandidate& rhs) {
                      if (lhs.f != rhs.f)
                          return lhs.f > rhs.f;
                      if (lhs.degree != rhs.degree)
                          return lhs.degree < rhs.degree;
                      return lhs.vertex < rhs.vertex;
                  });
        for (const SwingCandidate& tc : targets) {
            // the loser endpoint is always a pre-move common neighbor of the
            // new edge, so the realized gain is one less than the raw count
            const std::int64_t gain = static_cast<std::int64_t>(tc.f) - 1 -
                                      static_cast<std::int64_t>(cab);
            if (gain <= 0)
                break; // even the best target cannot strictly gain
            const VertexId hinge =
                tc.removed.a == tc.vertex ? tc.removed.b : tc.removed.a;
            const VertexId loser = hinge == a ? b : a;
            if (g.degree(loser) > g.degree(tc.vertex)) {
                Move mv;
                mv.kind = MoveKind::single_swing;
                mv.removed = {doorway->pair};
                mv.added = {tc.removed}; // pair(target, hinge)
                mv.delta_triangles = gain;
                mv.delta_wedges =
                    static_cast<std::int64_t>(g.degree(tc.vertex)) -
                    static_cast<std::int64_t>(g.degree(loser)) + 1;
                mv.doorway = doorway->pair;
                return mv;
            }
        }
        exclusions.add(doorway->pair);
    }
    return std::nullopt;
}

std::optional<Move> propose_degree_preserving(
    const Graph& g, const TriangleWedgeCache& cache, PolicyMode mode,
    Rng& rng, ExclusionSet& exclusions) {
    require_cache(g, cache);
    CandidateQueue doorways(nonedge_doorways(g, exclusions), mode,
                            CandidateQueue::GreedyOrder::max_count_first,
                            CandidateQueue::Weighting::by_count, rng);
    struct SwapCandidate {
        VertexId u = 0; // neighbor of x
        VertexId v = 0; // neighbor of y
        std::size_t count = 0;
    };
    std::vector<SwapCandidate> partners;
    while (const auto doorway = doorways.next()) {
        const auto [x, y] = std::pair(doorway->pair.a, doorway->pair.b);
        const std::size_t cxy = doorway->count;
        partners.clear();
        for (VertexId u : g.neighbors(x)) {
            for (VertexId v : g.neighbors(y)) {
                if (u == v || g.has_edge(u, v))
                    continue;
                partners.push_back({u, v, g.common_neighbor_count(u, v)});
            }
        }
        std::sort(partners.begin(), partners.end(),
                  [](const SwapCandidate& lhs, const SwapCandidate& rhs) {
                      if (lhs.count != rhs.count)
                          return lhs.count > rhs.count;
                      const VertexPair lp(lhs.u, lhs.v), rp(rhs.u, rhs.v);
                      if (lp != rp)
                          return lp < rp;
                      return lhs.u < rhs.u;
                  });
        for (const SwapCandidate& pc : partners) {
            const VertexId u = pc.u, v = pc.v;
            const std::size_t cuv = pc.count;
            const std::size_t cxu = g.common_neighbor_count(x, u);
            const std::size_t cyv = g.common_neighbor_count(y, v);
            const std::size_t cuy = g.common_neighbor_count(u, y);
            const std::size_t cxv = g.common_neighbor_count(x, v);
            // first pairing: remove {x,u},{y,v}; add {x,y},{u,v}
            if (cuv + cxy > cxu + cyv && cuv + cxy > cuy + cxv) {
                const std::int64_t gain =
                    static_cast<std::int64_t>(cxy) +
                    static_cast<std::int64_t>(cuv) -
                    (g.has_edge(u, y) ? 2 : 0) - (g.has_edge(x, v) ? 2 : 0) -
                    static_cast<std::int64_t>(cxu) -
                    static_cast<std::int64_t>(cyv);
                if (gain > 0) {
                    Move mv;
                    mv.kind = MoveKind::double_swap;
                    mv.removed = {VertexPair(x, u), VertexPair(y, v)};
                    mv.added = {doorway->pair, VertexPair(u, v)};
                    mv.delta_triangles = gain;
                    mv.delta_wedges = 0;
                    mv.doorway = doorway->pair;
                    return mv;
                }
            }
            // second pairing: remove {x,u},{y,v}; add {x,v},{u,y}. Here the
            // removed edges touch neither new pair's common neighborhood,
            // so the raw counts are already exact.
            if (cuy + cxv > cxu + cyv && !g.has_edge(x, v) &&
                !g.has_edge(u, y)) {
                const std::int64_t gain = static_cast<std::int64_t>(cuy) +
                                          static_cast<std::int64_t>(cxv) -
                                          static_cast<std::int64_t>(cxu) -
                                          static_cast<std::int64_t>(cyv);
                if (gain > 0) {
                    Move mv;
                    mv.kind = MoveKind::double_swap;
                    mv.removed = {VertexPair(x, u), VertexPair(y, v)};
                    mv.added = {VertexPair(x, v), VertexPair(u, y)};
                    mv.delta_triangles = gain;
                    mv.delta_wedges = 0;
                    mv.doorway = doorway->pair;
                    return mv;
                }
            }
        }
        exclusions.add(doorway->pair);
    }
    return std::nullopt;
}

std::optional<Move> propose(Algorithm algorithm, const Graph& g,
                            const TriangleWedgeCache& cache, PolicyMode mode,
                            Rng& rng, ExclusionSet& exclusions) {
    switch (algorithm) {
    case Algorithm::swing_toward_best:
        return propose_swing_toward_best(g, cache, mode, rng, exclusions);
    case Algorithm::swing_away_from_worst:
        return propose_swing_away_from_worst(g, cache, mode, rng, exclusions);
    case Algorithm::degree_preserving:
        return propose_degree_preserving(g, cache, mode, rng, exclusions);
    }
    throw usage_error("unknown algorithm");
}

ApplyResult apply_move(Graph& g, TriangleWedgeCache& cache, const Move& mv,
                       bool forbid_disconnect, ExclusionSet& exclusions) {
    if (forbid_disconnect) {
        const std::size_t before = connected_components(g).count;
        Graph probe = g;
        for (const VertexPair& r : mv.removed)
            probe.remove_edge(r.a, r.b);
        for (const VertexPair& a : mv.added)
            probe.add_edge(a.a, a.b);
        if (connected_components(probe).count > before) {
            exclusions.add(mv.doorway);
            return ApplyResult::rejected_disconnect;
        }
    }
    cache.apply_move(g, mv);
    return ApplyResult::applied;
}

RewireResult run_rewiring(Graph& g, const RewireConfig& config) {
    if (config.snapshot_every == 0)
        throw usage_error("snapshot_every must be >= 1");
    if (count_wedges(g) == 0)
        throw usage_error("rewiring needs a graph with at least one wedge");

    TriangleWedgeCache cache = TriangleWedgeCache::build(g);
    Rng rng(config.policy.seed);
    ExclusionSet exclusions;

    const std::size_t original_edges = g.edge_count();
    std::unordered_set<std::uint64_t> original;
    original.reserve(original_edges * 2);
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v : g.neighbors(u))
            if (v > u)
                original.insert(VertexPair(u, v).packed());
    std::unordered_set<std::uint64_t> rewired;

    RewireResult result;
    const auto make_record = [&](std::uint64_t step, bool expensive) {
        TrajectoryRecord rec;
        rec.step = step;
        rec.global_clustering = cache.global_clustering();
        rec.avg_local_clustering = cache.average_local_clustering();
        const ComponentInfo comps = connected_components(g);
        rec.components = comps.count;
        std::uint64_t reachable = 0;
        for (std::size_t s : comps.sizes)
            reachable += static_cast<std::uint64_t>(s) * (s - 1);
        rec.reachable_pairs = reachable;
        rec.edges_rewired_fraction =
            original_edges == 0
                ? 0.0
                : static_cast<double>(rewired.size()) /
                      static_cast<double>(original_edges);
        if (expensive && reachable > 0) {
            const PathLengthStats pl = average_path_length(g);
            rec.avg_path_length = pl.average;
            rec.small_world_index = rec.global_clustering / pl.average;
        }
        return rec;
    };

    result.trajectory.push_back(make_record(0, true));
    std::uint64_t moves = 0;
    bool fixed_point = false;
    while (!config.max_steps || moves < *config.max_steps) {
        const auto mv = propose(config.algorithm, g, cache,
                                config.policy.mode, rng, exclusions);
        if (!mv) {
            fixed_point = true;
            break;
        }
        if (apply_move(g, cache, *mv, config.forbid_disconnect, exclusions) ==
            ApplyResult::rejected_disconnect)
            continue;
        if (!config.persistent_exclusions)
            exclusions.clear();
        ++moves;
        for (const VertexPair& r : mv->removed)
            if (original.count(r.packed()))
                rewired.insert(r.packed());
        result.trajectory.push_back(
            make_record(moves, moves % config.snapshot_every == 0));
    }

    TrajectoryRecord& last = result.trajectory.back();
    if (!last.avg_path_length && last.reachable_pairs > 0) {
        const PathLengthStats pl = average_path_length(g);
        last.avg_path_length = pl.average;
        last.small_world_index = last.global_clustering / pl.average;
    }
    result.total_moves = moves;
    result.edges_rewired_fraction =
        original_edges == 0 ? 0.0
                            : static_cast<double>(rewired.size()) /
                                  static_cast<double>(original_edges);
    result.reached_fixed_point = fixed_point;
    return result;
}

} // namespace rewire
