#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "msomb/corpus.hpp"
#include "msomb/errors.hpp"
#include "msomb/graph.hpp"
#include "msomb/graph_families.hpp"

using namespace msomb;

namespace {

std::vector<int> degree_vector(const Graph& g) { return {g.degrees().begin(), g.degrees().end()}; }

TEST(ParseGraph, PathOnThreeVertices) {
  const Graph g = parse_graph("3\n0 1\n1 2");
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(degree_vector(g), (std::vector<int>{1, 2, 1}));
}

TEST(ParseGraph, Triangle) {
  const Graph g = parse_graph("3\n0 1\n1 2\n0 2");
  EXPECT_EQ(degree_vector(g), (std::vector<int>{2, 2, 2}));
}

TEST(ParseGraph, CommentsBlankLinesAndCrlf) {
  const Graph g = parse_graph("# a path\r\n3\r\n\r\n0 1\r\n# middle\r\n  1   2  \r\n");
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(2, 1));
}

TEST(ParseGraph, IsolatedVerticesAllowed) {
  const Graph g = parse_graph("4\n0 1\n");
  EXPECT_EQ(g.degree(3), 0);
}

TEST(ParseGraph, ErrorsNameTheLine) {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("2\n0 0"), 2u);              // self-loop
  EXPECT_EQ(line_of("3\n0 1\n# c\n1 0"), 4u);    // duplicate, either orientation
  EXPECT_EQ(line_of("3\n0 3"), 2u);              // out of range
  EXPECT_EQ(line_of("3\n0 -1"), 2u);
  EXPECT_EQ(line_of("3\n0 1 2"), 2u);
  EXPECT_EQ(line_of("3\n0 x"), 2u);
  EXPECT_EQ(line_of("0\n"), 1u);
  EXPECT_EQ(line_of("# only a comment\n"), 2u);  // end of input, no vertex count
  EXPECT_THROW(parse_graph("2\n0 0"), ParseError);
}

TEST(ParseGraph, RoundTripThroughEdgeList) {
  const Graph g = cycle_graph(7);
  const Graph back = parse_graph(to_edge_list(g));
  EXPECT_EQ(back.vertex_count(), g.vertex_count());
  EXPECT_TRUE(std::equal(g.edges().begin(), g.edges().end(), back.edges().begin(), back.edges().end()));
}

TEST(GraphConstruction, RejectsInvalidEdges) {
  EXPECT_THROW(Graph(2, {{0, 0}}), ArgumentError);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), ArgumentError);
  EXPECT_THROW(Graph(2, {{0, 2}}), ArgumentError);
  EXPECT_THROW(Graph(0, {}), ArgumentError);
}

TEST(DegreeExtremes, Examples) {
  const auto tri = degree_extremes(complete_graph(3));
  EXPECT_EQ(tri.min_degree, 2);
  EXPECT_EQ(tri.max_degree, 2);
  const auto star = degree_extremes(star_graph(3));
  EXPECT_EQ(star.min_degree, 1);
  EXPECT_EQ(star.max_degree, 3);
  const auto path = degree_extremes(path_graph(3));
  EXPECT_EQ(path.min_degree, 1);
  EXPECT_EQ(path.max_degree, 2);
  EXPECT_EQ(degree_extremes(parse_graph("3\n0 1")).min_degree, 0);
}

TEST(RegularityClass, Examples) {
  const auto k3 = regularity_class(complete_graph(3));
  EXPECT_EQ(k3.tag, RegularityTag::Regular);
  EXPECT_EQ(k3.degrees, std::vector<int>{2});

  const auto star = regularity_class(star_graph(3));
  EXPECT_EQ(star.tag, RegularityTag::Biregular);
  EXPECT_EQ(star.degrees, (std::vector<int>{1, 3}));

  EXPECT_EQ(regularity_class(path_graph(4)).tag, RegularityTag::Neither);
  EXPECT_EQ(regularity_class(Graph(3, {})).tag, RegularityTag::Neither);
  EXPECT_TRUE(regularity_class(Graph(3, {})).degrees.empty());
}

TEST(RegularityClass, P4ByExhaustiveEdgeScan) {
  // Two degree values {1, 2}, yet the middle edge joins two degree-2 vertices.
  const Graph p4 = path_graph(4);
  bool some_edge_within_class = false;
  for (const auto& e : p4.edges()) some_edge_within_class |= p4.degree(e.u) == p4.degree(e.v);
  EXPECT_TRUE(some_edge_within_class);
  EXPECT_EQ(regularity_class(p4).tag, RegularityTag::Neither);
}

TEST(RegularityClass, CompleteBipartiteFamily) {
  for (Vertex a = 1; a <= 5; ++a) {
    for (Vertex b = a; b <= 5; ++b) {
      const auto cls = regularity_class(complete_bipartite_graph(a, b));
      EXPECT_EQ(cls.tag, a == b ? RegularityTag::Regular : RegularityTag::Biregular) << a << "," << b;
    }
  }
}

TEST(IsConnected, Examples) {
  EXPECT_TRUE(is_connected(path_graph(3)));
  EXPECT_FALSE(is_connected(parse_graph("4\n0 1\n2 3")));
  EXPECT_TRUE(is_connected(Graph(1, {})));
  EXPECT_FALSE(is_connected(disjoint_union(complete_graph(3), complete_graph(4))));
}

TEST(EdgeBalance, Predicates) {
  const Graph k3k4 = disjoint_union(complete_graph(3), complete_graph(4));
  EXPECT_TRUE(all_edges_balanced(k3k4));
  EXPECT_FALSE(uniform_edge_degree_pair(k3k4));
  EXPECT_TRUE(uniform_edge_degree_pair(star_graph(4)));
  EXPECT_FALSE(all_edges_balanced(star_graph(4)));
}

TEST(GraphInvariants, HandshakeOnCorpusAndRandomGraphs) {
  auto graphs = default_corpus();
  auto random = random_corpus(7, 200);
  graphs.insert(graphs.end(), random.begin(), random.end());
  for (const auto& [name, g] : graphs) {
    const int degree_sum = std::accumulate(g.degrees().begin(), g.degrees().end(), 0);
    EXPECT_EQ(degree_sum, 2 * static_cast<int>(g.edge_count())) << name;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      EXPECT_EQ(static_cast<int>(g.neighbors(v).size()), g.degree(v)) << name;
  }
}

TEST(RandomCorpus, DeterministicAndConnected) {
  const auto a = random_corpus(99, 50);
  const auto b = random_corpus(99, 50);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(to_edge_list(a[i].graph), to_edge_list(b[i].graph));
    EXPECT_TRUE(is_connected(a[i].graph));
    EXPECT_LE(a[i].graph.vertex_count(), 12);
  }
}

}  // namespace
