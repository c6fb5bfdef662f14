#include "rewire/io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace rewire {

const char* const kTrajectoryCsvHeader =
    "step,global_clustering,avg_local_clustering,avg_path_length,"
    "reachable_pairs,small_world_index,edges_rewired_fraction,components";

EdgeListReadResult read_edge_list(std::istream& in) {
    EdgeListReadResult result;
    std::unordered_map<std::string, VertexId> ids;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::unordered_set<std::uint64_t> seen;
    const auto intern = [&](const std::string& label) {
        const auto [it, inserted] =
            ids.emplace(label, static_cast<VertexId>(result.labels.size()));
        if (inserted)
            result.labels.push_back(label);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string first, second, extra;
        if (!(tokens >> first) || first.front() == '#')
            continue; // blank or comment
        if (!(tokens >> second) || (tokens >> extra))
            throw parse_error("expected exactly two tokens", line_no);
        const VertexId u = intern(first);
        const VertexId v = intern(second);
        if (u == v) {
            ++result.self_loops;
            continue;
        }
        const std::uint64_t key =
            (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
            std::max(u, v);
        if (!seen.insert(key).second) {
            ++result.duplicate_edges;
            continue;
        }
        edges.emplace_back(u, v);
    }
    result.graph = Graph(result.labels.size());
    for (const auto& [u, v] : edges)
        result.graph.add_edge(u, v);
    return result;
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v : g.neighbors(u))
            if (v > u)
                out << u << ' ' << v << '\n';
    if (!out)
        throw io_error("edge list write failed");
}

LargestComponentResult extract_largest_component(const Graph& g) {
    const ComponentInfo comps = connected_components(g);
    LargestComponentResult result;
    if (comps.count == 0)
        return result;
    const std::size_t best =
        static_cast<std::size_t>(std::distance(
            comps.sizes.begin(),
            std::max_element(comps.sizes.begin(), comps.sizes.end())));
    std::vector<VertexId> new_id(g.vertex_count(), UINT32_MAX);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (comps.label[v] == best) {
            new_id[v] = static_cast<VertexId>(result.original_ids.size());
            result.original_ids.push_back(v);
        }
    }
    result.graph = Graph(result.original_ids.size());
    for (VertexId v : result.original_ids)
        for (VertexId w : g.neighbors(v))
            if (w > v)
                result.graph.add_edge(new_id[v], new_id[w]);
    return result;
}

namespace {

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

void write_csv_row(const TrajectoryRecord& r, std::ostream& out) {
    out << r.step << ',' << format_real(r.global_clustering) << ','
        << format_real(r.avg_local_clustering) << ',';
    if (r.avg_path_length)
        out << format_real(*r.avg_path_length);
    out << ',' << r.reachable_pairs << ',';
    if (r.small_world_index)
        out << format_real(*r.small_world_index);
    out << ',' << format_real(r.edges_rewired_fraction) << ','
        << r.components << '\n';
}

void write_jsonl_row(const TrajectoryRecord& r, std::ostream& out) {
    out << "{\"step\":" << r.step
        << ",\"global_clustering\":" << format_real(r.global_clustering)
        << ",\"avg_local_clustering\":"
        << format_real(r.avg_local_clustering) << ",\"avg_path_length\":";
    out << (r.avg_path_length ? format_real(*r.avg_path_length) : "null");
    out << ",\"reachable_pairs\":" << r.reachable_pairs
        << ",\"small_world_index\":";
    out << (r.small_world_index ? format_real(*r.small_world_index)
                                : "null");
    out << ",\"edges_rewired_fraction\":"
        << format_real(r.edges_rewired_fraction)
        << ",\"components\":" << r.components << "}\n";
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    fields.push_back(field);
    return fields;
}

} // namespace

void write_trajectory(std::span<const TrajectoryRecord> records,
                      std::ostream& out, TrajectoryFormat format) {
    if (format == TrajectoryFormat::csv) {
        out << kTrajectoryCsvHeader << '\n';
        for (const TrajectoryRecord& r : records)
            write_csv_row(r, out);
    } else {
        for (const TrajectoryRecord& r : records)
            write_jsonl_row(r, out);
    }
    if (!out)
        throw io_error("trajectory write failed");
}

std::vector<TrajectoryRecord> read_trajectory(std::istream& in,
                                              TrajectoryFormat format) {
    std::vector<TrajectoryRecord> records;
    std::string line;
    std::size_t line_no = 0;
    if (format == TrajectoryFormat::csv) {
        if (!std::getline(in, line))
            throw parse_error("missing CSV header", 1);
        ++line_no;
        if (line != kTrajectoryCsvHeader)
            throw parse_error("unexpected CSV header", 1);
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty())
                continue;
            const auto fields = split_csv(line);
            if (fields.size() != 8)
                throw parse_error("expected 8 CSV fields", line_no);
            TrajectoryRecord r;
            r.step = std::stoull(fields[0]);
            r.global_clustering = std::stod(fields[1]);
            r.avg_local_clustering = std::stod(fields[2]);
            if (!fields[3].empty())
                r.avg_path_length = std::stod(fields[3]);
            r.reachable_pairs = std::stoull(fields[4]);
            if (!fields[5].empty())
                r.small_world_index = std::stod(fields[5]);
            r.edges_rewired_fraction = std::stod(fields[6]);
            r.components = std::stoull(fields[7]);
            records.push_back(r);
        }
    } else {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty())
                continue;
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(line);
            } catch (const nlohmann::json::parse_error& e) {
                throw parse_error(e.what(), line_no);
            }
            TrajectoryRecord r;
            r.step = j.at("step").get<std::uint64_t>();
            r.global_clustering = j.at("global_clustering").get<double>();
            r.avg_local_clustering =
                j.at("avg_local_clustering").get<double>();
            if (!j.at("avg_path_length").is_null())
                r.avg_path_length = j.at("avg_path_length").get<double>();
            r.reachable_pairs = j.at("reachable_pairs").get<std::uint64_t>();
            if (!j.at("small_world_index").is_null())
                r.small_world_index =
                    j.at("small_world_index").get<double>();
            r.edges_rewired_fraction =
                j.at("edges_rewired_fraction").get<double>();
            r.components = j.at("components").get<std::uint64_t>();
            records.push_back(r);
        }
    }
    return records;
}

} // namespace rewire
