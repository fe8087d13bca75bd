#include "linkpred/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string>
#include <string_view>

#include "linkpred/error.hpp"

namespace linkpred {

Graph Graph::from_edges(std::span<const Edge> edges, std::size_t* self_loops_dropped) {
  Graph g;
  std::size_t loops = 0;
  auto intern = [&g](NodeId id) {
    auto [it, inserted] = g.index_.try_emplace(id, g.nodes_.size());
    if (inserted) {
      g.nodes_.push_back(id);
      g.adjacency_.emplace_back();
    }
    return it->second;
  };
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      ++loops;
      continue;
    }
    const std::size_t a = intern(e.u);
    const std::size_t b = intern(e.v);
    auto& adj_a = g.adjacency_[a];
    auto pos = std::lower_bound(adj_a.begin(), adj_a.end(), b);
    if (pos != adj_a.end() && *pos == b) continue;
    adj_a.insert(pos, b);
    auto& adj_b = g.adjacency_[b];
    adj_b.insert(std::lower_bound(adj_b.begin(), adj_b.end(), a), a);
    g.edges_.push_back(e);
  }
  if (self_loops_dropped) *self_loops_dropped = loops;
  return g;
}

std::optional<std::size_t> Graph::find_index(NodeId u) const {
  auto it = index_.find(u);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::index_of(NodeId u) const {
  auto it = index_.find(u);
  if (it == index_.end()) throw LookupError("unknown node " + std::to_string(u));
  return it->second;
}

bool Graph::has_edge_at(std::size_t i, std::size_t j) const {
  const auto& adj = adjacency_[i];
  return std::binary_search(adj.begin(), adj.end(), j);
}

std::size_t Graph::count_shared_at(std::size_t i, std::size_t j) const {
  const auto& a = adjacency_[i];
  const auto& b = adjacency_[j];
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

std::vector<NodeId> Graph::neighbors(NodeId u) const {
  std::vector<NodeId> out;
  for (std::size_t j : adjacency_[index_of(u)]) out.push_back(nodes_[j]);
  return out;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  return has_edge_at(index_of(u), index_of(v));
}

std::vector<NodeId> Graph::shared_neighbors(NodeId u, NodeId v) const {
  const auto& a = adjacency_[index_of(u)];
  const auto& b = adjacency_[index_of(v)];
  std::vector<std::size_t> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  std::vector<NodeId> out;
  out.reserve(common.size());
  for (std::size_t j : common) out.push_back(nodes_[j]);
  return out;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

NodeId parse_node(std::string_view token, std::size_t line_no) {
  NodeId value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
    throw ParseError(line_no, "expected a nonnegative integer node id, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

LoadResult load_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected 2 node ids, got " + std::to_string(tokens.size()) + " tokens");
    }
    edges.push_back({parse_node(tokens[0], line_no), parse_node(tokens[1], line_no)});
  }
  LoadResult result;
  result.graph = Graph::from_edges(edges, &result.self_loops_dropped);
  return result;
}

LoadResult load_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  return load_edge_list(in);
}

std::size_t test_edge_count(std::size_t num_edges, double test_fraction) {
  // Absorb round-off such as 0.1 * 170 landing just above 17.
  const double raw = test_fraction * static_cast<double>(num_edges);
  return static_cast<std::size_t>(std::ceil(raw - 1e-9));
}

EdgePartition split_edges(const Graph& g, double test_fraction, std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw ValidationError("test fraction must lie in (0, 1)");
  }
  if (g.num_edges() < 2) throw ValidationError("need at least 2 edges to split");

  std::vector<Edge> shuffled = g.edges();
  Rng rng(seed);
  for (std::size_t i = shuffled.size(); i > 1; --i) {
    std::swap(shuffled[i - 1], shuffled[uniform_index(rng, i)]);
  }
  const std::size_t n_test = test_edge_count(shuffled.size(), test_fraction);

  EdgePartition part;
  part.seed = seed;
  part.test_fraction = test_fraction;
  part.test.assign(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(n_test));
  part.train.assign(shuffled.begin() + static_cast<std::ptrdiff_t>(n_test), shuffled.end());
  return part;
}

std::size_t sample_non_neighbor_at(const Graph& g, std::size_t i, Rng& rng) {
  const std::size_t n = g.num_nodes();
  if (g.degree_at(i) + 1 >= n) {
    throw ValidationError("saturated node " + std::to_string(g.node_at(i)) +
                          ": adjacent to every other node");
  }
  for (;;) {
    const std::size_t j = uniform_index(rng, n);
    if (j != i && !g.has_edge_at(i, j)) return j;
  }
}

NodeId sample_non_neighbor(const Graph& g, NodeId u, Rng& rng) {
  return g.node_at(sample_non_neighbor_at(g, g.index_of(u), rng));
}

}  // namespace linkpred
