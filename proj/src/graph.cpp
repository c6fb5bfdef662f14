#include "rewire/graph.hpp"

#include <algorithm>

#include "rewire/intersect.hpp"

namespace rewire {

bool Graph::has_edge(VertexId u, VertexId v) const {
    require_vertex(u);
    require_vertex(v);
    if (u == v)
        return false;
    const auto& row = adjacency_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

void Graph::add_edge(VertexId u, VertexId v) {
    require_pair(u, v);
    auto& row_u = adjacency_[u];
    const auto it = std::lower_bound(row_u.begin(), row_u.end(), v);
    if (it != row_u.end() && *it == v)
        throw state_error("edge already present: {" + std::to_string(u) +
                          "," + std::to_string(v) + "}");
    row_u.insert(it, v);
    auto& row_v = adjacency_[v];
    row_v.insert(std::lower_bound(row_v.begin(), row_v.end(), u), u);
    ++edge_count_;
    ++revision_;
}

void Graph::remove_edge(VertexId u, VertexId v) {
    require_pair(u, v);
    auto& row_u = adjacency_[u];
    const auto it = std::lower_bound(row_u.begin(), row_u.end(), v);
    if (it == row_u.end() || *it != v)
        throw state_error("edge not present: {" + std::to_string(u) + "," +
                          std::to_string(v) + "}");
    row_u.erase(it);
    auto& row_v = adjacency_[v];
    row_v.erase(std::lower_bound(row_v.begin(), row_v.end(), u));
    --edge_count_;
    ++revision_;
}

void Graph::set_edge(VertexId u, VertexId v, bool present) {
    if (present)
        add_edge(u, v);
    else
        remove_edge(u, v);
}

std::vector<VertexId> Graph::common_neighbors(VertexId x, VertexId y) const {
    require_pair(x, y);
    std::vector<VertexId> out;
    simd::intersect(adjacency_[x], adjacency_[y], out);
    return out;
}

std::size_t Graph::common_neighbor_count(VertexId x, VertexId y) const {
    require_pair(x, y);
    return simd::intersect_count(adjacency_[x], adjacency_[y]);
}

void Graph::check_invariants() const {
    std::size_t degree_sum = 0;
    for (VertexId v = 0; v < adjacency_.size(); ++v) {
        const auto& row = adjacency_[v];
        degree_sum += row.size();
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] == v)
                throw state_error("self-loop at vertex " + std::to_string(v));
            if (i > 0 && row[i] <= row[i - 1])
                throw state_error("adjacency not strictly sorted at vertex " +
                                  std::to_string(v));
            if (row[i] >= adjacency_.size())
                throw state_error("neighbor id out of range at vertex " +
                                  std::to_string(v));
            if (!has_edge(row[i], v))
                throw state_error("asymmetric edge {" + std::to_string(v) +
                                  "," + std::to_string(row[i]) + "}");
        }
    }
    if (degree_sum != 2 * edge_count_)
        throw state_error("edge count mismatch");
}

ComponentInfo connected_components(const Graph& g) {
    const std::size_t n = g.vertex_count();
    ComponentInfo info;
    info.label.assign(n, UINT32_MAX);
    std::vector<VertexId> queue;
    for (VertexId start = 0; start < n; ++start) {
        if (info.label[start] != UINT32_MAX)
            continue;
        const auto comp = static_cast<std::uint32_t>(info.count++);
        std::size_t size = 0;
        queue.clear();
        queue.push_back(start);
        info.label[start] = comp;
        while (!queue.empty()) {
            const VertexId v = queue.back();
            queue.pop_back();
            ++size;
            for (VertexId w : g.neighbors(v)) {
                if (info.label[w] == UINT32_MAX) {
                    info.label[w] = comp;
                    queue.push_back(w);
                }
            }
        }
        info.sizes.push_back(size);
    }
    return info;
}

bool is_connected(const Graph& g) {
    return connected_components(g).count <= 1;
}

} // namespace rewire
