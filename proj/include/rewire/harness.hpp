#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rewire/generators.hpp"
#include "rewire/io.hpp"
#include "rewire/rewiring.hpp"

namespace rewire {

struct GeneratorSpec {
    enum class Kind { erdos_renyi, barabasi_albert, ring_lattice };
    Kind kind = Kind::erdos_renyi;
    std::size_t n = 100;
    double p = 0.07;   // erdos_renyi
    std::size_t m = 3; // barabasi_albert attachments
    std::size_t k = 6; // ring_lattice half-bandwidth
};

Graph make_graph(const GeneratorSpec& spec, std::uint64_t seed);

// Independent deterministic RNG streams derived from one replication seed.
std::uint64_t seed_stream(std::uint64_t seed, std::uint64_t stream);
constexpr std::uint64_t kGraphStream = 1;
constexpr std::uint64_t kRandomizeStream = 2;
constexpr std::uint64_t kPolicyStream = 3;

struct ExperimentConfig {
    std::optional<GeneratorSpec> generator;
    std::optional<std::filesystem::path> input_file;
    bool largest_component = false; // file ingestion option
    std::size_t randomize_count = 0; // pre-rewiring random rewires
    RewireConfig rewire;             // policy.seed is the base seed
    std::size_t replications = 1;    // replication r runs seed base+r
    std::size_t jobs = 1;
    std::filesystem::path output_dir;
    std::string prefix = "rep";
    TrajectoryFormat format = TrajectoryFormat::csv;
};

struct ReplicationResult {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    bool ok = false;
    std::string error;
    std::filesystem::path trajectory_file;
    std::uint64_t total_moves = 0;
    double edges_rewired_fraction = 0.0;
    bool reached_fixed_point = false;
    TrajectoryRecord initial;
    TrajectoryRecord final_record;
};

struct ExperimentSummary {
    std::vector<ReplicationResult> replications;
    std::uint64_t first_stop = 0; // earliest final step among successes
    std::uint64_t last_stop = 0;  // latest final step
    std::filesystem::path summary_csv;
    std::filesystem::path summary_json;
};

// One trajectory file per replication plus summary.csv (per-step mean/sd of
// each metric, shorter runs padded with their final values) and summary.json
// (per-replication outcomes and the stop markers). Per-replication failures
// are recorded, not thrown.
ExperimentSummary run_experiment(const ExperimentConfig& config);

struct DegreePreservationSeedResult {
    std::uint64_t seed = 0;
    double final_clustering_toward = 0.0;
    double final_clustering_preserving = 0.0;
    double rewired_fraction_toward = 0.0;
    double rewired_fraction_preserving = 0.0;
    bool degrees_preserved = false; // per-vertex degrees after algorithm 3
};

struct DegreePreservationReport {
    std::vector<DegreePreservationSeedResult> seeds;
    double mean_final_toward = 0.0;
    double mean_final_preserving = 0.0;
    bool all_degrees_preserved = false;
};

// Runs swing-toward-best and the degree-preserving variant on identical
// graphs (seed-for-seed) and compares outcomes. When output_dir is given the
// per-seed trajectories are written beneath it.
DegreePreservationReport compare_degree_preservation(
    const GeneratorSpec& spec, PolicyMode mode, std::uint64_t base_seed,
    std::size_t seeds, std::size_t jobs,
    const std::optional<std::filesystem::path>& output_dir = std::nullopt);

// Parallel driver used for replications; fn(i) for i in [0, count).
void parallel_for(std::size_t count, std::size_t jobs,
                  const std::function<void(std::size_t)>& fn);

// Named experiment bundles (fig3..fig8). Returns process exit code.
int run_preset(const std::string& name, std::size_t replications,
               std::uint64_t base_seed, std::size_t jobs,
               const std::filesystem::path& output_dir);

const std::vector<std::string>& preset_names();

} // namespace rewire
