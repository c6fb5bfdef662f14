#pragma once

#include <cstdint>
#include <optional>

namespace rewire {

// Per-step metric snapshot. avg_path_length / small_world_index are only
// present on rows where the all-pairs BFS ran (step 0, snapshot steps, and
// the final row).
struct TrajectoryRecord {
    std::uint64_t step = 0;
    double global_clustering = 0.0;
    double avg_local_clustering = 0.0;
    std::optional<double> avg_path_length;
    std::uint64_t reachable_pairs = 0;
    std::optional<double> small_world_index;
    double edges_rewired_fraction = 0.0;
    std::uint64_t components = 0;

    bool operator==(const TrajectoryRecord&) const = default;
};

} // namespace rewire
