#pragma once
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "linkpred/random.hpp"

namespace linkpred {

/** Node identifier as it appears in an edge-list file (nonnegative). */
using NodeId = std::int64_t;

/** Undirected edge, stored once in first-seen orientation. */
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/**
 * Immutable undirected simple graph.
 *
 * Nodes get a dense index in first-seen order (the order they appear in the
 * edge stream). Adjacency lists hold dense indices sorted ascending, so set
 * intersections are linear merges.
 */
class Graph {
 public:
  Graph() = default;

  /**
   * Build from an edge sequence. Repeated and reversed duplicates collapse to
   * one edge; self-loops are dropped and counted in `self_loops_dropped`.
   */
  static Graph from_edges(std::span<const Edge> edges, std::size_t* self_loops_dropped = nullptr);

  std::size_t num_nodes() const noexcept { return nodes_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }

  /** Node ids in dense-index order. */
  const std::vector<NodeId>& nodes() const noexcept { return nodes_; }
  /** Edges in first-seen order. */
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool contains(NodeId u) const { return index_.contains(u); }
  std::optional<std::size_t> find_index(NodeId u) const;
  /** Dense index of `u`; throws LookupError for unknown nodes. */
  std::size_t index_of(NodeId u) const;
  NodeId node_at(std::size_t i) const { return nodes_[i]; }

  /** Sorted dense indices adjacent to dense index `i`. */
  std::span<const std::size_t> adjacent(std::size_t i) const { return adjacency_[i]; }
  std::size_t degree_at(std::size_t i) const { return adjacency_[i].size(); }
  bool has_edge_at(std::size_t i, std::size_t j) const;
  std::size_t count_shared_at(std::size_t i, std::size_t j) const;

  std::size_t degree(NodeId u) const { return degree_at(index_of(u)); }
  std::vector<NodeId> neighbors(NodeId u) const;
  bool has_edge(NodeId u, NodeId v) const;
  /** N(u) ∩ N(v), in dense-index order. */
  std::vector<NodeId> shared_neighbors(NodeId u, NodeId v) const;

 private:
  std::vector<NodeId> nodes_;
  std::unordered_map<NodeId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<Edge> edges_;
};

struct LoadResult {
  Graph graph;
  std::size_t self_loops_dropped = 0;
};

/**
 * Parse a whitespace-separated edge list: one pair of nonnegative decimal
 * integers per line, LF or CRLF, blank lines ignored. Throws ParseError with
 * the 1-based line number on malformed input.
 */
LoadResult load_edge_list(std::istream& in);
LoadResult load_edge_list_file(const std::filesystem::path& path);

struct EdgePartition {
  std::vector<Edge> train;
  std::vector<Edge> test;
  std::uint64_t seed = 0;
  double test_fraction = 0.1;
};

/** Number of test edges for `num_edges` edges: ceil(fraction * num_edges). */
std::size_t test_edge_count(std::size_t num_edges, double test_fraction);

/** Seeded uniform train/test split of g's edges. The graph is not modified. */
EdgePartition split_edges(const Graph& g, double test_fraction, std::uint64_t seed);

/**
 * Uniform draw from the nodes of g that are neither u nor adjacent to u, by
 * rejection. Throws ValidationError("saturated node") when no candidate exists.
 */
NodeId sample_non_neighbor(const Graph& g, NodeId u, Rng& rng);
std::size_t sample_non_neighbor_at(const Graph& g, std::size_t i, Rng& rng);

}  // namespace linkpred
