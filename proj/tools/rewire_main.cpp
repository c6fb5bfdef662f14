#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rewire/harness.hpp"
#include "rewire/intersect.hpp"
#include "rewire/metrics.hpp"

namespace {

using namespace rewire;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "swing-toward")
        return Algorithm::swing_toward_best;
    if (name == "swing-away")
        return Algorithm::swing_away_from_worst;
    if (name == "degree-preserving")
        return Algorithm::degree_preserving;
    throw usage_error("unknown algorithm: " + name);
}

PolicyMode parse_policy(const std::string& name) {
    if (name == "greedy")
        return PolicyMode::greedy;
    if (name == "probabilistic")
        return PolicyMode::probabilistic;
    if (name == "random")
        return PolicyMode::uniform_random;
    throw usage_error("unknown policy: " + name);
}

Graph read_graph_file(const std::string& path, bool largest_component) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open " + path);
    EdgeListReadResult result = read_edge_list(in);
    std::cerr << "read " << path << ": n=" << result.graph.vertex_count()
              << " m=" << result.graph.edge_count();
    if (result.duplicate_edges || result.self_loops)
        std::cerr << " (dropped " << result.duplicate_edges
                  << " duplicates, " << result.self_loops << " self-loops)";
    std::cerr << '\n';
    if (!largest_component)
        return std::move(result.graph);
    LargestComponentResult lcc = extract_largest_component(result.graph);
    std::cerr << "largest component: n=" << lcc.graph.vertex_count()
              << " m=" << lcc.graph.edge_count() << '\n';
    return std::move(lcc.graph);
}

int cmd_gen(const std::string& kind, std::size_t n, double p, std::size_t m,
            std::size_t k, std::uint64_t seed, std::size_t randomize,
            std::uint64_t randomize_seed, const std::string& output) {
    Graph g;
    if (kind == "er")
        g = erdos_renyi(n, p, seed);
    else if (kind == "ba")
        g = barabasi_albert(n, m, seed);
    else if (kind == "ring")
        g = ring_lattice(n, k);
    else
        throw usage_error("unknown generator kind: " + kind);
    if (randomize > 0)
        g = randomize_edges(g, randomize, randomize_seed);
    std::ofstream out(output);
    if (!out)
        throw io_error("cannot write " + output);
    write_edge_list(g, out);
    std::cerr << "wrote " << output << ": n=" << g.vertex_count()
              << " m=" << g.edge_count() << '\n';
    return kExitOk;
}

int cmd_metrics(const std::string& input, bool largest_component) {
    const Graph g = read_graph_file(input, largest_component);
    std::cout << "nodes: " << g.vertex_count() << '\n'
              << "edges: " << g.edge_count() << '\n'
              << "triangles: " << count_triangles(g) << '\n'
              << "wedges: " << count_wedges(g) << '\n';
    try {
        std::cout << "global_clustering: " << format_real(global_clustering(g))
                  << '\n';
    } catch (const undefined_metric_error&) {
        std::cout << "global_clustering: undefined\n";
    }
    std::cout << "avg_local_clustering: "
              << format_real(average_local_clustering(g)) << '\n';
    const ComponentInfo comps = connected_components(g);
    try {
        const PathLengthStats pl = average_path_length(g);
        std::cout << "avg_path_length: " << format_real(pl.average) << '\n'
                  << "reachable_pairs: " << pl.reachable_pairs << '\n';
        std::cout << "small_world_index: "
                  << format_real(global_clustering(g) / pl.average) << '\n';
    } catch (const std::exception&) {
        std::cout << "avg_path_length: undefined\n"
                  << "reachable_pairs: 0\n"
                  << "small_world_index: undefined\n";
    }
    std::cout << "components: " << comps.count << '\n';
    return kExitOk;
}

int cmd_run(const std::string& input, bool largest_component,
            const std::string& algorithm, const std::string& policy,
            std::uint64_t seed, std::uint64_t snapshot_every,
            std::optional<std::uint64_t> max_steps, bool forbid_disconnect,
            const std::string& output, const std::string& format) {
    Graph g = read_graph_file(input, largest_component);
    RewireConfig cfg;
    cfg.algorithm = parse_algorithm(algorithm);
    cfg.policy.mode = parse_policy(policy);
    cfg.policy.seed = seed;
    cfg.snapshot_every = snapshot_every;
    cfg.max_steps = max_steps;
    cfg.forbid_disconnect = forbid_disconnect;
    const RewireResult result = run_rewiring(g, cfg);
    std::ofstream out(output);
    if (!out)
        throw io_error("cannot write " + output);
    const TrajectoryFormat fmt = format == "jsonl" ? TrajectoryFormat::jsonl
                                                   : TrajectoryFormat::csv;
    write_trajectory(result.trajectory, out, fmt);
    const TrajectoryRecord& last = result.trajectory.back();
    std::cerr << "moves: " << result.total_moves
              << (result.reached_fixed_point ? " (fixed point)" : " (capped)")
              << "\nedges_rewired_fraction: "
              << format_real(result.edges_rewired_fraction)
              << "\nfinal_global_clustering: "
              << format_real(last.global_clustering) << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"door-swing graph rewiring toolkit"};
    app.require_subcommand(1);
    std::string simd_mode = "auto";
    app.add_option("--simd", simd_mode, "kernel selection: auto|scalar|avx2")
        ->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph edge list");
    std::string gen_kind = "er", gen_output;
    std::size_t gen_n = 100, gen_m = 3, gen_k = 6, gen_randomize = 0;
    double gen_p = 0.07;
    std::uint64_t gen_seed = 1, gen_randomize_seed = 1;
    gen->add_option("--kind", gen_kind, "er|ba|ring")->required();
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--p", gen_p, "ER edge probability");
    gen->add_option("--m", gen_m, "BA attachments per vertex");
    gen->add_option("--k", gen_k, "ring lattice half-bandwidth");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--randomize", gen_randomize,
                    "randomly rewire this many edges afterwards");
    gen->add_option("--randomize-seed", gen_randomize_seed,
                    "seed for --randomize");
    gen->add_option("-o,--output", gen_output, "output edge list")
        ->required();

    // run
    auto* run = app.add_subcommand("run", "rewire a graph, write trajectory");
    std::string run_input, run_algorithm = "swing-toward",
                run_policy = "greedy", run_output, run_format = "csv";
    std::uint64_t run_seed = 1, run_snapshot = 100;
    std::uint64_t run_max_steps_value = 0;
    bool run_forbid = false, run_lcc = false;
    run->add_option("--input", run_input, "input edge list")->required();
    run->add_option("--algorithm", run_algorithm,
                    "swing-toward|swing-away|degree-preserving");
    run->add_option("--policy", run_policy, "greedy|probabilistic|random");
    run->add_option("--seed", run_seed, "policy seed");
    run->add_option("--snapshot-every", run_snapshot,
                    "path-length cadence in moves");
    auto* max_opt =
        run->add_option("--max-steps", run_max_steps_value, "move cap");
    run->add_flag("--forbid-disconnect", run_forbid,
                  "veto moves that disconnect the graph");
    run->add_flag("--largest-component", run_lcc,
                  "rewire only the largest component");
    run->add_option("-o,--output", run_output, "trajectory file")->required();
    run->add_option("--format", run_format, "csv|jsonl");

    // experiment
    auto* exp = app.add_subcommand("experiment", "run a figure preset");
    std::string exp_preset, exp_output;
    std::size_t exp_reps = 100, exp_jobs = 1;
    std::uint64_t exp_seed = 1;
    exp->add_option("--preset", exp_preset, "fig3|fig4|fig5|fig6|fig7|fig8")
        ->required();
    exp->add_option("--replications", exp_reps, "replications per setting");
    exp->add_option("--seed", exp_seed, "base seed");
    exp->add_option("--jobs", exp_jobs, "parallel workers");
    exp->add_option("-o,--output", exp_output, "output directory")
        ->required();

    // metrics
    auto* met = app.add_subcommand("metrics", "print metrics of a graph");
    std::string met_input;
    bool met_lcc = false;
    met->add_option("--input", met_input, "input edge list")->required();
    met->add_flag("--largest-component", met_lcc,
                  "restrict to the largest component");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (simd_mode == "scalar")
            rewire::simd::force_impl(rewire::simd::Impl::scalar);
        else if (simd_mode == "avx2")
            rewire::simd::force_impl(rewire::simd::Impl::avx2);
        else if (simd_mode != "auto")
            throw usage_error("unknown --simd mode: " + simd_mode);

        if (gen->parsed())
            return cmd_gen(gen_kind, gen_n, gen_p, gen_m, gen_k, gen_seed,
                           gen_randomize, gen_randomize_seed, gen_output);
        if (run->parsed()) {
            std::optional<std::uint64_t> max_steps;
            if (max_opt->count() > 0)
                max_steps = run_max_steps_value;
            return cmd_run(run_input, run_lcc, run_algorithm, run_policy,
                           run_seed, run_snapshot, max_steps, run_forbid,
                           run_output, run_format);
        }
        if (exp->parsed())
            return rewire::run_preset(exp_preset, exp_reps, exp_seed,
                                      exp_jobs, exp_output);
        if (met->parsed())
            return cmd_metrics(met_input, met_lcc);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
