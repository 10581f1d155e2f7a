#include "msomb/graph_families.hpp"

#include "msomb/errors.hpp"

namespace msomb {

Graph path_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(Vertex n) {
  if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph star_graph(Vertex leaves) { return complete_bipartite_graph(1, leaves); }

Graph complete_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(Vertex a, Vertex b) {
  if (a < 1 || b < 1) throw ArgumentError("complete bipartite sides must be nonempty");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) edges.push_back({i, a + j});
  return Graph(a + b, std::move(edges));
}

Graph disjoint_union(const Graph& first, const Graph& second) {
  std::vector<Edge> edges(first.edges().begin(), first.edges().end());
  const Vertex shift = first.vertex_count();
  for (const Edge& e : second.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(first.vertex_count() + second.vertex_count(), std::move(edges));
}

Graph random_connected_graph(std::mt19937_64& rng, Vertex n, double p) {
  if (n < 2) throw ArgumentError("random graph needs at least 2 vertices");
  if (!(p > 0.0 && p <= 1.0)) throw ArgumentError("edge probability must lie in (0, 1]");
  // Raw 53-bit draws keep the sequence identical across standard libraries.
  auto coin = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; };
  for (;;) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (coin()) edges.push_back({i, j});
    Graph g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
}

}  // namespace msomb
