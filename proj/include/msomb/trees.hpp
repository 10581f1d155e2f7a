#pragma once

#include <limits>
#include <string>
#include <vector>

#include "msomb/graph.hpp"

namespace msomb {

/// Connected with exactly n-1 edges.
bool is_tree(const Graph& g);

/// Level sequence of the tree rooted at its centroid, children ordered by
/// decreasing sequence; for a bicentroidal tree the larger of the two
/// rootings is taken. Two trees are isomorphic iff their sequences match.
/// Throws ArgumentError if g is not a tree.
std::vector<int> canonical_level_sequence(const Graph& tree);

/// canonical_level_sequence rendered one base-36 digit per vertex.
std::string canonical_form(const Graph& tree);

/// Rebuilds the tree whose vertex i sits at position i of the sequence.
Graph tree_from_level_sequence(const std::vector<int>& levels);

/// All pairwise non-isomorphic trees on n vertices with every degree at
/// most max_degree, relabelled canonically and sorted by canonical form.
std::vector<Graph> enumerate_trees(Vertex n, int max_degree = std::numeric_limits<int>::max());

struct Skeleton {
  std::string name;       // IUPAC name of the alkane with this carbon skeleton
  std::string canonical;  // canonical_form of graph
  Graph graph;
};

/// The 18 octane carbon skeletons (trees on 8 vertices, degree <= 4).
std::vector<Skeleton> enumerate_octane_skeletons();

/// IUPAC name of a C8 skeleton given its canonical form; empty if unknown.
std::string octane_isomer_name(const std::string& canonical);

}  // namespace msomb
