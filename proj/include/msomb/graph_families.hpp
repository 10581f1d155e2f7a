#pragma once

#include <cstdint>
#include <random>

#include "msomb/graph.hpp"

namespace msomb {

Graph path_graph(Vertex n);
Graph cycle_graph(Vertex n);
/// K_{1,leaves}; vertex 0 is the centre.
Graph star_graph(Vertex leaves);
Graph complete_graph(Vertex n);
/// K_{a,b}; vertices 0..a-1 form the first side.
Graph complete_bipartite_graph(Vertex a, Vertex b);
/// Vertex ids of `second` are shifted by first.vertex_count().
Graph disjoint_union(const Graph& first, const Graph& second);

/// G(n, p) samples redrawn until connected. n >= 2, 0 < p <= 1.
Graph random_connected_graph(std::mt19937_64& rng, Vertex n, double p);

}  // namespace msomb
