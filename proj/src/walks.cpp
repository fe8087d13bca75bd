#include "linkpred/walks.hpp"

#include <algorithm>
#include <string>

#include "linkpred/error.hpp"

namespace linkpred {

namespace {

void check_pq(double p, double q) {
  if (!(p > 0.0) || !(q > 0.0)) throw ValidationError("p and q must be positive");
}

AliasEntry make_entry(const Graph& g, std::size_t prev, std::size_t curr, double p, double q) {
  AliasEntry e;
  e.prev = g.node_at(prev);
  e.curr = g.node_at(curr);
  const auto weights = transition_weights(g, prev, curr, p, q);
  e.arrays = make_alias(weights);
  e.index_to_node.reserve(weights.size());
  for (std::size_t j : g.adjacent(curr)) e.index_to_node.push_back(g.node_at(j));
  return e;
}

std::vector<std::size_t> slot_offsets(const Graph& g) {
  std::vector<std::size_t> offsets(g.num_nodes() + 1, 0);
  for (std::size_t i = 0; i < g.num_nodes(); ++i) offsets[i + 1] = offsets[i] + g.degree_at(i);
  return offsets;
}

/** (prev, curr) dense indices for every slot. */
std::vector<std::pair<std::size_t, std::size_t>> slot_edges(const Graph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    for (std::size_t j : g.adjacent(i)) out.emplace_back(i, j);
  }
  return out;
}

std::size_t position_in(std::span<const std::size_t> adj, std::size_t target) {
  auto it = std::lower_bound(adj.begin(), adj.end(), target);
  return static_cast<std::size_t>(it - adj.begin());
}

}  // namespace

std::vector<double> transition_weights(const Graph& g, std::size_t prev, std::size_t curr,
                                       double p, double q) {
  std::vector<double> w;
  w.reserve(g.degree_at(curr));
  for (std::size_t next : g.adjacent(curr)) {
    if (next == prev) {
      w.push_back(1.0 / p);
    } else if (g.has_edge_at(prev, next)) {
      w.push_back(1.0);
    } else {
      w.push_back(1.0 / q);
    }
  }
  return w;
}

AliasTable build_alias_table(const Graph& g, double p, double q) {
  check_pq(p, q);
  if (g.empty()) throw ValidationError("alias table needs a nonempty graph");
  AliasTable t;
  t.p_ = p;
  t.q_ = q;
  t.offsets_ = slot_offsets(g);
  const auto edges = slot_edges(g);
  t.entries_.resize(edges.size());

  #pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(edges.size()); ++s) {
    const auto [prev, curr] = edges[static_cast<std::size_t>(s)];
    t.entries_[static_cast<std::size_t>(s)] = make_entry(g, prev, curr, p, q);
  }
  return t;
}

AliasTable build_alias_table_serial(const Graph& g, double p, double q) {
  check_pq(p, q);
  if (g.empty()) throw ValidationError("alias table needs a nonempty graph");
  AliasTable t;
  t.p_ = p;
  t.q_ = q;
  t.offsets_ = slot_offsets(g);
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    for (std::size_t j : g.adjacent(i)) t.entries_.push_back(make_entry(g, i, j, p, q));
  }
  return t;
}

const AliasEntry& AliasTable::entry(const Graph& g, NodeId prev, NodeId curr) const {
  const std::size_t i = g.index_of(prev);
  const std::size_t j = g.index_of(curr);
  if (!g.has_edge_at(i, j)) {
    throw LookupError("no alias entry for (" + std::to_string(prev) + ", " + std::to_string(curr) + ")");
  }
  return entries_[slot(i, position_in(g.adjacent(i), j))];
}

NodeId alias_draw(const AliasEntry& entry, Rng& rng) {
  return entry.index_to_node[alias_draw_index(entry.arrays, rng)];
}

void WalkParams::validate() const {
  if (length < 1) throw ValidationError("walk length l must be >= 1");
  if (walks_per_node < 1) throw ValidationError("walks per node r must be >= 1");
  if (mode == WalkMode::AliasWeighted) check_pq(p, q);
  if (!(c >= 0.0 && c <= 1.0)) throw ValidationError("restart parameter c must lie in [0, 1]");
}

namespace {

void weighted_walk_into(const Graph& g, const AliasTable& table, std::size_t start,
                        std::size_t length, Rng& rng, Walk& walk) {
  walk.clear();
  walk.reserve(length + 1);
  walk.push_back(g.node_at(start));
  auto adj = g.adjacent(start);
  if (adj.empty()) throw ValidationError("walk start node has degree 0");
  std::size_t k = uniform_index(rng, adj.size());
  std::size_t prev = start;
  std::size_t curr = adj[k];
  walk.push_back(g.node_at(curr));
  for (std::size_t step = 1; step < length; ++step) {
    const AliasEntry& e = table.at_slot(table.slot(prev, k));
    k = alias_draw_index(e.arrays, rng);
    prev = curr;
    curr = g.adjacent(curr)[k];
    walk.push_back(g.node_at(curr));
  }
}

void restart_walk_into(const Graph& g, std::size_t start, std::size_t length, double c, Rng& rng,
                       Walk& walk) {
  walk.clear();
  walk.reserve(length + 1);
  walk.push_back(g.node_at(start));
  std::size_t curr = start;
  for (std::size_t step = 0; step < length; ++step) {
    if (uniform01(rng) < c) {
      auto adj = g.adjacent(curr);
      if (adj.empty()) throw ValidationError("restart walk reached a degree-0 node");
      curr = adj[uniform_index(rng, adj.size())];
    } else {
      curr = start;
    }
    walk.push_back(g.node_at(curr));
  }
}

}  // namespace

Walk weighted_walk(const Graph& g, const AliasTable& table, NodeId x, std::size_t length, Rng& rng) {
  Walk w;
  weighted_walk_into(g, table, g.index_of(x), length, rng, w);
  return w;
}

Walk restart_walk(const Graph& g, NodeId x, std::size_t length, double c, Rng& rng) {
  if (!(c >= 0.0 && c <= 1.0)) throw ValidationError("restart parameter c must lie in [0, 1]");
  Walk w;
  restart_walk_into(g, g.index_of(x), length, c, rng, w);
  return w;
}

std::vector<Walk> generate_corpus(const Graph& g, const WalkParams& params, std::uint64_t seed) {
  params.validate();
  if (g.empty()) throw ValidationError("cannot generate walks on an empty graph");
  AliasTable table;
  if (params.mode == WalkMode::AliasWeighted) table = build_alias_table(g, params.p, params.q);

  Rng rng(seed);
  std::vector<Walk> corpus(params.walks_per_node * g.num_nodes());
  std::size_t next = 0;
  for (std::size_t round = 0; round < params.walks_per_node; ++round) {
    for (std::size_t i = 0; i < g.num_nodes(); ++i) {
      Walk& w = corpus[next++];
      if (params.mode == WalkMode::AliasWeighted) {
        weighted_walk_into(g, table, i, params.length, rng, w);
      } else {
        restart_walk_into(g, i, params.length, params.c, rng, w);
      }
    }
  }
  return corpus;
}

}  // namespace linkpred
