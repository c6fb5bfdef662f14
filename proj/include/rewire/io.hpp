#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "rewire/graph.hpp"
#include "rewire/trajectory.hpp"

namespace rewire {

struct EdgeListReadResult {
    Graph graph;
    std::vector<std::string> labels; // dense id -> original label
    std::size_t duplicate_edges = 0; // dropped
    std::size_t self_loops = 0;      // dropped
};

// Whitespace-separated `u v` lines; `#` comments and blank lines ignored;
// arbitrary labels mapped to dense ids in first-appearance order. Duplicate
// edges and self-loops are dropped and counted. A line with other than two
// tokens is a parse_error carrying its line number.
EdgeListReadResult read_edge_list(std::istream& in);

// One `u v` line per edge with u < v, ascending. Isolated vertices have no
// representation in this format.
void write_edge_list(const Graph& g, std::ostream& out);

struct LargestComponentResult {
    Graph graph;
    std::vector<VertexId> original_ids; // new id -> id in the input graph
};

LargestComponentResult extract_largest_component(const Graph& g);

enum class TrajectoryFormat { csv, jsonl };

// CSV header (byte-exact):
// step,global_clustering,avg_local_clustering,avg_path_length,
// reachable_pairs,small_world_index,edges_rewired_fraction,components
// Reals carry 12 significant digits; missing optionals are an empty CSV
// field / JSON null.
void write_trajectory(std::span<const TrajectoryRecord> records,
                      std::ostream& out, TrajectoryFormat format);

std::vector<TrajectoryRecord> read_trajectory(std::istream& in,
                                              TrajectoryFormat format);

extern const char* const kTrajectoryCsvHeader;

} // namespace rewire
