#include "rewire/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <thread>

#include <nlohmann/json.hpp>

#include "rewire/metrics.hpp"

namespace rewire {

namespace fs = std::filesystem;
using nlohmann::json;

Graph make_graph(const GeneratorSpec& spec, std::uint64_t seed) {
    switch (spec.kind) {
    case GeneratorSpec::Kind::erdos_renyi:
        return erdos_renyi(spec.n, spec.p, seed);
    case GeneratorSpec::Kind::barabasi_albert:
        return barabasi_albert(spec.n, spec.m, seed);
    case GeneratorSpec::Kind::ring_lattice:
        return ring_lattice(spec.n, spec.k);
    }
    throw usage_error("unknown generator kind");
}

std::uint64_t seed_stream(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 of (seed, stream) so the graph, randomization, and policy
    // draws never share an engine state
    std::uint64_t z = seed + stream * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void parallel_for(std::size_t count, std::size_t jobs,
                  const std::function<void(std::size_t)>& fn) {
    jobs = std::max<std::size_t>(1, std::min(jobs, count));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                fn(i);
            }
        });
    }
    for (std::thread& t : workers)
        t.join();
}

namespace {

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

Graph load_input_graph(const ExperimentConfig& cfg) {
    std::ifstream in(*cfg.input_file);
    if (!in)
        throw io_error("cannot open " + cfg.input_file->string());
    EdgeListReadResult read = read_edge_list(in);
    if (cfg.largest_component)
        return extract_largest_component(read.graph).graph;
    return read.graph;
}

struct MetricSeries {
    // value per step for one replication, padded on demand
    std::vector<double> values;
    std::vector<bool> present;
};

struct StepStat {
    double mean = 0.0;
    double sd = 0.0;
    std::size_t n = 0;
};

StepStat stat_of(const std::vector<double>& xs) {
    StepStat s;
    s.n = xs.size();
    if (xs.empty())
        return s;
    double sum = 0.0;
    for (double x : xs)
        sum += x;
    s.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs)
            ss += (x - s.mean) * (x - s.mean);
        s.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return s;
}

void write_summary_csv(const fs::path& path,
                       const std::vector<std::vector<TrajectoryRecord>>& runs) {
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot write " + path.string());
    out << "step,reps,global_clustering_mean,global_clustering_sd,"
           "avg_local_clustering_mean,avg_local_clustering_sd,"
           "avg_path_length_mean,avg_path_length_sd,avg_path_length_reps,"
           "small_world_index_mean,small_world_index_sd,"
           "small_world_index_reps,edges_rewired_fraction_mean,"
           "edges_rewired_fraction_sd,components_mean,components_sd\n";
    std::size_t max_len = 0;
    for (const auto& run : runs)
        max_len = std::max(max_len, run.size());
    std::vector<double> c, lc, pl, swi, fr, comp;
    for (std::size_t step = 0; step < max_len; ++step) {
        c.clear();
        lc.clear();
        pl.clear();
        swi.clear();
        fr.clear();
        comp.clear();
        for (const auto& run : runs) {
            if (run.empty())
                continue;
            // a terminated run keeps contributing its final row
            const TrajectoryRecord& rec =
                step < run.size() ? run[step] : run.back();
            c.push_back(rec.global_clustering);
            lc.push_back(rec.avg_local_clustering);
            fr.push_back(rec.edges_rewired_fraction);
            comp.push_back(static_cast<double>(rec.components));
            if (rec.avg_path_length)
                pl.push_back(*rec.avg_path_length);
            if (rec.small_world_index)
                swi.push_back(*rec.small_world_index);
        }
        const StepStat sc = stat_of(c), slc = stat_of(lc), spl = stat_of(pl),
                       sswi = stat_of(swi), sfr = stat_of(fr),
                       scomp = stat_of(comp);
        out << step << ',' << sc.n << ',' << format_real(sc.mean) << ','
            << format_real(sc.sd) << ',' << format_real(slc.mean) << ','
            << format_real(slc.sd) << ',';
        if (spl.n > 0)
            out << format_real(spl.mean) << ',' << format_real(spl.sd);
        else
            out << ',';
        out << ',' << spl.n << ',';
        if (sswi.n > 0)
            out << format_real(sswi.mean) << ',' << format_real(sswi.sd);
        else
            out << ',';
        out << ',' << sswi.n << ',' << format_real(sfr.mean) << ','
            << format_real(sfr.sd) << ',' << format_real(scomp.mean) << ','
            << format_real(scomp.sd) << '\n';
    }
}

} // namespace

ExperimentSummary run_experiment(const ExperimentConfig& config) {
    if (!config.generator && !config.input_file)
        throw usage_error("experiment needs a generator or an input file");
    if (config.generator && config.input_file)
        throw usage_error("experiment source must be generator or file, "
                          "not both");
    if (config.replications < 1)
        throw usage_error("replications must be >= 1");
    fs::create_directories(config.output_dir);

    // file input is parsed once; replications differ in policy seed only
    std::optional<Graph> base_graph;
    if (config.input_file)
        base_graph = load_input_graph(config);

    ExperimentSummary summary;
    summary.replications.resize(config.replications);
    const char* ext =
        config.format == TrajectoryFormat::csv ? ".csv" : ".jsonl";

    parallel_for(config.replications, config.jobs, [&](std::size_t r) {
        ReplicationResult& out = summary.replications[r];
        out.index = r;
        out.seed = config.rewire.policy.seed + r;
        char name[64];
        std::snprintf(name, sizeof(name), "%s%04zu%s", config.prefix.c_str(),
                      r, ext);
        out.trajectory_file = config.output_dir / name;
        try {
            Graph g = base_graph
                          ? *base_graph
                          : make_graph(*config.generator,
                                       seed_stream(out.seed, kGraphStream));
            if (config.randomize_count > 0)
                g = randomize_edges(g, config.randomize_count,
                                    seed_stream(out.seed, kRandomizeStream));
            RewireConfig rc = config.rewire;
            rc.policy.seed = seed_stream(out.seed, kPolicyStream);
            const RewireResult res = run_rewiring(g, rc);
            std::ofstream file(out.trajectory_file);
            if (!file)
                throw io_error("cannot write " +
                               out.trajectory_file.string());
            write_trajectory(res.trajectory, file, config.format);
            out.total_moves = res.total_moves;
            out.edges_rewired_fraction = res.edges_rewired_fraction;
            out.reached_fixed_point = res.reached_fixed_point;
            out.initial = res.trajectory.front();
            out.final_record = res.trajectory.back();
            out.ok = true;
        } catch (const std::exception& e) {
            out.ok = false;
            out.error = e.what();
        }
    });

    // summary statistics are recomputed from the files on disk
    std::vector<std::vector<TrajectoryRecord>> runs;
    bool any = false;
    std::uint64_t first_stop = 0, last_stop = 0;
    for (const ReplicationResult& rep : summary.replications) {
        if (!rep.ok)
            continue;
        std::ifstream file(rep.trajectory_file);
        runs.push_back(read_trajectory(file, config.format));
        const std::uint64_t stop = rep.total_moves;
        if (!any || stop < first_stop)
            first_stop = stop;
        if (!any || stop > last_stop)
            last_stop = stop;
        any = true;
    }
    summary.first_stop = first_stop;
    summary.last_stop = last_stop;
    summary.summary_csv = config.output_dir / "summary.csv";
    summary.summary_json = config.output_dir / "summary.json";
    write_summary_csv(summary.summary_csv, runs);

    json j;
    j["replications"] = config.replications;
    j["first_stop"] = summary.first_stop;
    j["last_stop"] = summary.last_stop;
    j["runs"] = json::array();
    for (const ReplicationResult& rep : summary.replications) {
        json r;
        r["index"] = rep.index;
        r["seed"] = rep.seed;
        r["file"] = rep.trajectory_file.filename().string();
        r["ok"] = rep.ok;
        if (!rep.ok) {
            r["error"] = rep.error;
        } else {
            r["moves"] = rep.total_moves;
            r["edges_rewired_fraction"] = rep.edges_rewired_fraction;
            r["reached_fixed_point"] = rep.reached_fixed_point;
            r["initial_global_clustering"] = rep.initial.global_clustering;
            r["final_global_clustering"] =
                rep.final_record.global_clustering;
            r["final_avg_local_clustering"] =
                rep.final_record.avg_local_clustering;
            r["final_components"] = rep.final_record.components;
        }
        j["runs"].push_back(std::move(r));
    }
    std::ofstream jf(summary.summary_json);
    if (!jf)
        throw io_error("cannot write " + summary.summary_json.string());
    jf << j.dump(2) << '\n';
    return summary;
}

DegreePreservationReport compare_degree_preservation(
    const GeneratorSpec& spec, PolicyMode mode, std::uint64_t base_seed,
    std::size_t seeds, std::size_t jobs,
    const std::optional<std::filesystem::path>& output_dir) {
    if (seeds < 1)
        throw usage_error("compare_degree_preservation needs >= 1 seed");
    if (output_dir) {
        fs::create_directories(*output_dir / "toward");
        fs::create_directories(*output_dir / "degree-preserving");
    }
    DegreePreservationReport report;
    report.seeds.resize(seeds);
    parallel_for(seeds, jobs, [&](std::size_t i) {
        DegreePreservationSeedResult& out = report.seeds[i];
        out.seed = base_seed + i;
        const Graph original =
            make_graph(spec, seed_stream(out.seed, kGraphStream));
        std::vector<std::size_t> degrees_before(original.vertex_count());
        for (VertexId v = 0; v < original.vertex_count(); ++v)
            degrees_before[v] = original.degree(v);

        const auto run_one = [&](Algorithm alg, const char* dir_name,
                                 double& final_c, double& fraction,
                                 Graph& final_graph) {
            Graph g = original;
            RewireConfig rc;
            rc.algorithm = alg;
            rc.policy.mode = mode;
            rc.policy.seed = seed_stream(out.seed, kPolicyStream);
            const RewireResult res = run_rewiring(g, rc);
            final_c = res.trajectory.back().global_clustering;
            fraction = res.edges_rewired_fraction;
            if (output_dir) {
                char name[64];
                std::snprintf(name, sizeof(name), "rep%04zu.csv", i);
                std::ofstream file(*output_dir / dir_name / name);
                write_trajectory(res.trajectory, file,
                                 TrajectoryFormat::csv);
            }
            final_graph = std::move(g);
        };

        Graph after_toward, after_preserving;
        run_one(Algorithm::swing_toward_best, "toward",
                out.final_clustering_toward, out.rewired_fraction_toward,
                after_toward);
        run_one(Algorithm::degree_preserving, "degree-preserving",
                out.final_clustering_preserving,
                out.rewired_fraction_preserving, after_preserving);

        out.degrees_preserved = true;
        for (VertexId v = 0; v < after_preserving.vertex_count(); ++v) {
            if (after_preserving.degree(v) != degrees_before[v]) {
                out.degrees_preserved = false;
                break;
            }
        }
    });

    double sum_toward = 0.0, sum_preserving = 0.0;
    report.all_degrees_preserved = true;
    for (const auto& s : report.seeds) {
        sum_toward += s.final_clustering_toward;
        sum_preserving += s.final_clustering_preserving;
        report.all_degrees_preserved &= s.degrees_preserved;
    }
    report.mean_final_toward = sum_toward / static_cast<double>(seeds);
    report.mean_final_preserving =
        sum_preserving / static_cast<double>(seeds);

    if (output_dir) {
        json j;
        j["mean_final_toward"] = report.mean_final_toward;
        j["mean_final_degree_preserving"] = report.mean_final_preserving;
        j["all_degrees_preserved"] = report.all_degrees_preserved;
        j["seeds"] = json::array();
        for (const auto& s : report.seeds) {
            j["seeds"].push_back(
                {{"seed", s.seed},
                 {"final_toward", s.final_clustering_toward},
                 {"final_degree_preserving", s.final_clustering_preserving},
                 {"rewired_fraction_toward", s.rewired_fraction_toward},
                 {"rewired_fraction_degree_preserving",
                  s.rewired_fraction_preserving},
                 {"degrees_preserved", s.degrees_preserved}});
        }
        std::ofstream jf(*output_dir / "report.json");
        jf << j.dump(2) << '\n';
    }
    return report;
}

namespace {

const GeneratorSpec kEr100{GeneratorSpec::Kind::erdos_renyi, 100, 0.07, 3, 6};

ExperimentConfig base_config(const fs::path& dir, std::size_t replications,
                             std::uint64_t base_seed, std::size_t jobs) {
    ExperimentConfig cfg;
    cfg.generator = kEr100;
    cfg.rewire.algorithm = Algorithm::swing_toward_best;
    cfg.rewire.policy = {PolicyMode::greedy, base_seed};
    cfg.replications = replications;
    cfg.jobs = jobs;
    cfg.output_dir = dir;
    return cfg;
}

int preset_fig3(const fs::path& dir, std::size_t reps, std::uint64_t seed,
                std::size_t jobs) {
    const std::pair<Algorithm, const char*> algs[] = {
        {Algorithm::swing_toward_best, "toward"},
        {Algorithm::swing_away_from_worst, "away"}};
    const std::pair<PolicyMode, const char*> modes[] = {
        {PolicyMode::greedy, "greedy"},
        {PolicyMode::probabilistic, "probabilistic"},
        {PolicyMode::uniform_random, "random"}};
    for (const auto& [alg, alg_name] : algs) {
        for (const auto& [mode, mode_name] : modes) {
            ExperimentConfig cfg = base_config(
                dir / (std::string(alg_name) + "-" + mode_name), reps, seed,
                jobs);
            cfg.rewire.algorithm = alg;
            cfg.rewire.policy.mode = mode;
            run_experiment(cfg);
        }
    }
    return 0;
}

int preset_fig5(const fs::path& dir, std::size_t reps, std::uint64_t seed,
                std::size_t jobs) {
    for (std::size_t m : {3, 5, 7}) {
        ExperimentConfig cfg =
            base_config(dir / ("ba-m" + std::to_string(m)), reps, seed, jobs);
        cfg.generator = GeneratorSpec{GeneratorSpec::Kind::barabasi_albert,
                                      100, 0.0, m, 0};
        run_experiment(cfg);
    }
    return 0;
}

int preset_fig8(const fs::path& dir, std::size_t reps, std::uint64_t seed,
                std::size_t jobs) {
    // reference metrics of the intact lattice
    fs::create_directories(dir);
    {
        const Graph lattice = ring_lattice(100, 6);
        json j;
        j["lattice"] = {
            {"global_clustering", global_clustering(lattice)},
            {"avg_local_clustering", average_local_clustering(lattice)},
            {"avg_path_length", average_path_length(lattice).average}};
        std::ofstream out(dir / "reference.json");
        out << j.dump(2) << '\n';
    }
    for (std::size_t count : {300, 150, 75, 50}) {
        ExperimentConfig cfg = base_config(
            dir / ("randomize-" + std::to_string(count)), reps, seed, jobs);
        cfg.generator =
            GeneratorSpec{GeneratorSpec::Kind::ring_lattice, 100, 0.0, 0, 6};
        cfg.randomize_count = count;
        run_experiment(cfg);
    }
    return 0;
}

} // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"fig3", "fig4", "fig5",
                                                   "fig6", "fig7", "fig8"};
    return names;
}

int run_preset(const std::string& name, std::size_t replications,
               std::uint64_t base_seed, std::size_t jobs,
               const std::filesystem::path& output_dir) {
    const fs::path dir = output_dir / name;
    if (name == "fig3")
        return preset_fig3(dir, replications, base_seed, jobs);
    if (name == "fig4") {
        compare_degree_preservation(kEr100, PolicyMode::greedy, base_seed,
                                    replications, jobs, dir);
        return 0;
    }
    if (name == "fig5")
        return preset_fig5(dir, replications, base_seed, jobs);
    if (name == "fig6" || name == "fig7") {
        ExperimentConfig cfg = base_config(dir, replications, base_seed, jobs);
        cfg.rewire.snapshot_every = 100;
        run_experiment(cfg);
        return 0;
    }
    if (name == "fig8")
        return preset_fig8(dir, replications, base_seed, jobs);
    throw usage_error("unknown preset: " + name);
}

} // namespace rewire
