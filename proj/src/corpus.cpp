#include "msomb/corpus.hpp"

#include <random>
#include <string>

#include "msomb/graph_families.hpp"
#include "msomb/trees.hpp"

namespace msomb {

std::vector<NamedGraph> default_corpus() {
  std::vector<NamedGraph> out;
  for (auto& s : enumerate_octane_skeletons()) out.push_back({"octane:" + s.name, std::move(s.graph)});
  for (Vertex n = 1; n <= 7; ++n)
    for (auto& t : enumerate_trees(n)) out.push_back({"tree" + std::to_string(n) + ":" + canonical_form(t), std::move(t)});
  for (Vertex n = 1; n <= 6; ++n) out.push_back({"K" + std::to_string(n), complete_graph(n)});
  for (Vertex a = 1; a <= 4; ++a)
    for (Vertex b = a; b <= 4; ++b)
      out.push_back({"K" + std::to_string(a) + "," + std::to_string(b), complete_bipartite_graph(a, b)});
  for (Vertex n = 2; n <= 10; ++n) out.push_back({"P" + std::to_string(n), path_graph(n)});
  for (Vertex n = 3; n <= 10; ++n) out.push_back({"C" + std::to_string(n), cycle_graph(n)});
  for (Vertex k = 1; k <= 9; ++k) out.push_back({"S" + std::to_string(k), star_graph(k)});
  out.push_back({"K3+K4", disjoint_union(complete_graph(3), complete_graph(4))});
  return out;
}

std::vector<NamedGraph> random_corpus(std::uint64_t seed, std::size_t count, Vertex max_vertices) {
  std::mt19937_64 rng(seed);
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<NamedGraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = static_cast<Vertex>(2 + rng() % static_cast<std::uint64_t>(max_vertices - 1));
    const double p = 0.15 + 0.7 * unit();
    out.push_back({"random:seed=" + std::to_string(seed) + ":" + std::to_string(i) + ":n=" + std::to_string(n),
                   random_connected_graph(rng, n, p)});
  }
  return out;
}

}  // namespace msomb
