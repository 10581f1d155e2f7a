#include "msomb/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <sstream>

#include "msomb/errors.hpp"

namespace msomb {

namespace {

Edge normalized(Edge e) { return e.u < e.v ? e : Edge{e.v, e.u}; }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits on runs of blanks and parses every token as a base-10 integer.
bool parse_ints(std::string_view line, std::vector<long long>& out) {
  out.clear();
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    const auto end = line.find_first_of(" \t", pos);
    const auto token = line.substr(pos, end == std::string_view::npos ? line.size() - pos : end - pos);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return false;
    out.push_back(value);
    pos += token.size();
  }
  return true;
}

}  // namespace

Graph::Graph(Vertex vertex_count, std::vector<Edge> edges) {
  if (vertex_count < 1) throw ArgumentError("graph needs at least one vertex");
  degrees_.assign(static_cast<std::size_t>(vertex_count), 0);
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
  edges_.reserve(edges.size());

  std::set<std::pair<Vertex, Vertex>> seen;
  for (const Edge& raw : edges) {
    if (raw.u < 0 || raw.v < 0 || raw.u >= vertex_count || raw.v >= vertex_count)
      throw ArgumentError("vertex id out of range in edge " + std::to_string(raw.u) + "-" + std::to_string(raw.v));
    if (raw.u == raw.v) throw ArgumentError("self-loop at vertex " + std::to_string(raw.u));
    const Edge e = normalized(raw);
    if (!seen.emplace(e.u, e.v).second)
      throw ArgumentError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    edges_.push_back(e);
    ++degrees_[static_cast<std::size_t>(e.u)];
    ++degrees_[static_cast<std::size_t>(e.v)];
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph parse_graph(std::string_view text) {
  std::optional<long long> vertex_count;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<long long> fields;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!parse_ints(line, fields)) throw ParseError(line_no, "expected integers, got '" + std::string(line) + "'");

    if (!vertex_count) {
      if (fields.size() != 1 || fields[0] < 1)
        throw ParseError(line_no, "first line must be a positive vertex count");
      if (fields[0] > std::numeric_limits<Vertex>::max()) throw ParseError(line_no, "vertex count too large");
      vertex_count = fields[0];
      continue;
    }
    if (fields.size() != 2) throw ParseError(line_no, "expected an edge 'u v'");
    const long long u = fields[0];
    const long long v = fields[1];
    if (u < 0 || v < 0 || u >= *vertex_count || v >= *vertex_count)
      throw ParseError(line_no, "vertex id out of range [0, " + std::to_string(*vertex_count) + ")");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    const Edge e = normalized({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    if (!seen.emplace(e.u, e.v).second)
      throw ParseError(line_no, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    edges.push_back(e);
  }
  if (!vertex_count) throw ParseError(line_no, "missing vertex count");
  return Graph(static_cast<Vertex>(*vertex_count), std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

DegreeExtremes degree_extremes(const Graph& g) {
  const auto [lo, hi] = std::minmax_element(g.degrees().begin(), g.degrees().end());
  return {*lo, *hi};
}

RegularityClass regularity_class(const Graph& g) {
  if (g.edge_count() == 0) return {RegularityTag::Neither, {}};

  std::set<int> distinct(g.degrees().begin(), g.degrees().end());
  if (distinct.size() == 1) return {RegularityTag::Regular, {*distinct.begin()}};
  if (distinct.size() == 2) {
    const bool alternating = std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
      return g.degree(e.u) != g.degree(e.v);
    });
    if (alternating) return {RegularityTag::Biregular, {distinct.begin(), distinct.end()}};
  }
  return {RegularityTag::Neither, {}};
}

bool is_connected(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<bool> visited(n, false);
  std::queue<Vertex> frontier;
  frontier.push(0);
  visited[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (const Vertex w : g.neighbors(u)) {
      if (!visited[static_cast<std::size_t>(w)]) {
        visited[static_cast<std::size_t>(w)] = true;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == n;
}

bool all_edges_balanced(const Graph& g) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return g.degree(e.u) == g.degree(e.v); });
}

bool uniform_edge_degree_pair(const Graph& g) {
  if (g.edge_count() == 0) return true;
  auto pair_of = [&](const Edge& e) {
    const int a = g.degree(e.u);
    const int b = g.degree(e.v);
    return a < b ? std::pair{a, b} : std::pair{b, a};
  };
  const auto first = pair_of(g.edges().front());
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return pair_of(e) == first; });
}

std::string to_string(RegularityTag tag) {
  switch (tag) {
    case RegularityTag::Regular: return "Regular";
    case RegularityTag::Biregular: return "Biregular";
    case RegularityTag::Neither: return "Neither";
  }
  return "?";
}

}  // namespace msomb
