#include "msomb/trees.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "msomb/errors.hpp"

namespace msomb {

namespace {

using Sequence = std::vector<int>;

Sequence rooted_sequence(const Graph& tree, Vertex root) {
  std::function<Sequence(Vertex, Vertex, int)> encode = [&](Vertex v, Vertex parent, int depth) {
    std::vector<Sequence> children;
    for (const Vertex w : tree.neighbors(v))
      if (w != parent) children.push_back(encode(w, v, depth + 1));
    std::sort(children.begin(), children.end(), std::greater<>{});
    Sequence out{depth};
    for (const auto& child : children) out.insert(out.end(), child.begin(), child.end());
    return out;
  };
  return encode(root, -1, 0);
}

std::vector<Vertex> centroids(const Graph& tree) {
  const Vertex n = tree.vertex_count();
  std::vector<int> subtree(static_cast<std::size_t>(n), 1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    for (const Vertex w : tree.neighbors(v)) {
      if (w != parent[static_cast<std::size_t>(v)]) {
        parent[static_cast<std::size_t>(w)] = v;
        order.push_back(w);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex p = parent[static_cast<std::size_t>(*it)];
    if (p >= 0) subtree[static_cast<std::size_t>(p)] += subtree[static_cast<std::size_t>(*it)];
  }

  std::vector<Vertex> result;
  for (Vertex v = 0; v < n; ++v) {
    int heaviest = n - subtree[static_cast<std::size_t>(v)];
    for (const Vertex w : tree.neighbors(v))
      if (w != parent[static_cast<std::size_t>(v)]) heaviest = std::max(heaviest, subtree[static_cast<std::size_t>(w)]);
    if (2 * heaviest <= n) result.push_back(v);
  }
  return result;
}

struct SubstitutedChain {
  const char* name;
  int chain;
  std::vector<std::pair<int, int>> branches;  // (1-based chain position, branch length)
};

Graph build_alkane(const SubstitutedChain& isomer) {
  std::vector<Edge> edges;
  Vertex next = isomer.chain;
  for (Vertex i = 0; i + 1 < isomer.chain; ++i) edges.push_back({i, i + 1});
  for (const auto& [position, length] : isomer.branches) {
    Vertex attach = position - 1;
    for (int k = 0; k < length; ++k) {
      edges.push_back({attach, next});
      attach = next++;
    }
  }
  return Graph(next, std::move(edges));
}

const std::map<std::string, std::string>& octane_name_table() {
  static const std::map<std::string, std::string> table = [] {
    const std::vector<SubstitutedChain> isomers = {
        {"n-octane", 8, {}},
        {"2-methylheptane", 7, {{2, 1}}},
        {"3-methylheptane", 7, {{3, 1}}},
        {"4-methylheptane", 7, {{4, 1}}},
        {"3-ethylhexane", 6, {{3, 2}}},
        {"2,2-dimethylhexane", 6, {{2, 1}, {2, 1}}},
        {"2,3-dimethylhexane", 6, {{2, 1}, {3, 1}}},
        {"2,4-dimethylhexane", 6, {{2, 1}, {4, 1}}},
        {"2,5-dimethylhexane", 6, {{2, 1}, {5, 1}}},
        {"3,3-dimethylhexane", 6, {{3, 1}, {3, 1}}},
        {"3,4-dimethylhexane", 6, {{3, 1}, {4, 1}}},
        {"3-ethyl-2-methylpentane", 5, {{3, 2}, {2, 1}}},
        {"3-ethyl-3-methylpentane", 5, {{3, 2}, {3, 1}}},
        {"2,2,3-trimethylpentane", 5, {{2, 1}, {2, 1}, {3, 1}}},
        {"2,2,4-trimethylpentane", 5, {{2, 1}, {2, 1}, {4, 1}}},
        {"2,3,3-trimethylpentane", 5, {{2, 1}, {3, 1}, {3, 1}}},
        {"2,3,4-trimethylpentane", 5, {{2, 1}, {3, 1}, {4, 1}}},
        {"2,2,3,3-tetramethylbutane", 4, {{2, 1}, {2, 1}, {3, 1}, {3, 1}}},
    };
    std::map<std::string, std::string> out;
    for (const auto& isomer : isomers) out.emplace(canonical_form(build_alkane(isomer)), isomer.name);
    return out;
  }();
  return table;
}

}  // namespace

bool is_tree(const Graph& g) {
  return g.edge_count() + 1 == static_cast<std::size_t>(g.vertex_count()) && is_connected(g);
}

std::vector<int> canonical_level_sequence(const Graph& tree) {
  if (!is_tree(tree)) throw ArgumentError("canonical level sequence requires a tree");
  Sequence best;
  for (const Vertex c : centroids(tree)) best = std::max(best, rooted_sequence(tree, c));
  return best;
}

std::string canonical_form(const Graph& tree) {
  static constexpr char digits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string out;
  for (const int level : canonical_level_sequence(tree)) {
    if (level >= 36) throw ArgumentError("tree too deep for canonical string encoding");
    out.push_back(digits[level]);
  }
  return out;
}

Graph tree_from_level_sequence(const std::vector<int>& levels) {
  if (levels.empty() || levels.front() != 0) throw ArgumentError("level sequence must start with the root at 0");
  std::vector<Edge> edges;
  std::vector<Vertex> last_at_level{0};
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const int level = levels[i];
    if (level < 1 || static_cast<std::size_t>(level) > last_at_level.size())
      throw ArgumentError("level sequence jumps by more than one");
    const auto v = static_cast<Vertex>(i);
    edges.push_back({last_at_level[static_cast<std::size_t>(level - 1)], v});
    last_at_level.resize(static_cast<std::size_t>(level));
    last_at_level.push_back(v);
  }
  return Graph(static_cast<Vertex>(levels.size()), std::move(edges));
}

std::vector<Graph> enumerate_trees(Vertex n, int max_degree) {
  if (n < 1) throw ArgumentError("tree enumeration needs n >= 1");
  std::set<Sequence> layer{Sequence{0}};
  for (Vertex size = 1; size < n; ++size) {
    std::set<Sequence> grown;
    for (const auto& levels : layer) {
      const Graph tree = tree_from_level_sequence(levels);
      for (Vertex v = 0; v < size; ++v) {
        if (tree.degree(v) >= max_degree) continue;
        std::vector<Edge> edges(tree.edges().begin(), tree.edges().end());
        edges.push_back({v, size});
        grown.insert(canonical_level_sequence(Graph(size + 1, std::move(edges))));
      }
    }
    layer = std::move(grown);
  }

  std::vector<Graph> trees;
  trees.reserve(layer.size());
  for (const auto& levels : layer) trees.push_back(tree_from_level_sequence(levels));
  return trees;
}

std::vector<Skeleton> enumerate_octane_skeletons() {
  std::vector<Skeleton> out;
  for (auto& tree : enumerate_trees(8, 4)) {
    auto canonical = canonical_form(tree);
    auto name = octane_isomer_name(canonical);
    out.push_back({std::move(name), std::move(canonical), std::move(tree)});
  }
  return out;
}

std::string octane_isomer_name(const std::string& canonical) {
  const auto& table = octane_name_table();
  const auto it = table.find(canonical);
  return it == table.end() ? std::string{} : it->second;
}

}  // namespace msomb
