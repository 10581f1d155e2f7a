#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace msomb {

using Vertex = std::int32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected finite graph. Immutable after construction.
///
/// Vertex ids are 0..vertex_count()-1. Edges are stored with u < v in the
/// order they were supplied.
class Graph {
public:
  /// Throws ArgumentError on self-loops, duplicate edges, or ids out of range.
  Graph(Vertex vertex_count, std::vector<Edge> edges);

  Vertex vertex_count() const noexcept { return static_cast<Vertex>(degrees_.size()); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const int> degrees() const noexcept { return degrees_; }
  int degree(Vertex v) const { return degrees_.at(static_cast<std::size_t>(v)); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }

  bool has_edge(Vertex u, Vertex v) const;

private:
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// A graph together with an identifier used in reports and datasets.
struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Parses the edge-list text format: first non-comment line is the vertex
/// count, then one "u v" pair per line. Lines starting with '#' and blank
/// lines are ignored. Throws ParseError naming the offending line.
Graph parse_graph(std::string_view text);

/// Inverse of parse_graph. Output is deterministic for a given graph.
std::string to_edge_list(const Graph& g);

struct DegreeExtremes {
  int min_degree;
  int max_degree;
};

/// Min and max over the whole degree sequence, isolated vertices included.
DegreeExtremes degree_extremes(const Graph& g);

enum class RegularityTag { Regular, Biregular, Neither };

struct RegularityClass {
  RegularityTag tag;
  std::vector<int> degrees;  // one value for Regular, two (ascending) for Biregular
};

RegularityClass regularity_class(const Graph& g);

bool is_connected(const Graph& g);

/// True iff every edge joins two vertices of equal degree, i.e. every
/// connected component with an edge is regular.
bool all_edges_balanced(const Graph& g);

/// True iff every edge carries the same unordered degree pair.
bool uniform_edge_degree_pair(const Graph& g);

std::string to_string(RegularityTag tag);

}  // namespace msomb
