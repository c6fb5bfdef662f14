#pragma once

#include <cstdint>

#include "rewire/graph.hpp"

namespace rewire {

// G(n,p): each of the C(n,2) pairs independently with probability p.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

// Preferential attachment from a K_{m+1} seed clique; every later vertex
// attaches to m distinct existing vertices sampled proportionally to degree
// (resampling duplicates). Final edge count: C(m+1,2) + (n-m-1)*m.
Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);

// L(n,k): vertex i adjacent to j iff their circular distance is <= k.
// Requires 1 <= k < n/2; every degree is 2k, edge count n*k.
Graph ring_lattice(std::size_t n, std::size_t k);

// Watts-Strogatz-style partial randomization: `count` distinct edges chosen
// uniformly; each keeps a uniformly chosen endpoint and reconnects the other
// to a uniform random vertex (self-loops, existing edges, and the original
// partner are resampled). Preserves n and m.
Graph randomize_edges(const Graph& g, std::size_t count, std::uint64_t seed);

} // namespace rewire
