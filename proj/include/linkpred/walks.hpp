#pragma once
#include <cstddef>
#include <cstdint>
#include <vector>

#include "linkpred/alias.hpp"
#include "linkpred/graph.hpp"

namespace linkpred {

/** Alias arrays for the step out of `curr` given the walk arrived from `prev`. */
struct AliasEntry {
  NodeId prev = 0;
  NodeId curr = 0;
  AliasArrays arrays;
  /** Outcome index -> node id; same order as the adjacency of `curr`. */
  std::vector<NodeId> index_to_node;
};

/**
 * Second-order transition tables, one entry per directed edge (prev, curr).
 *
 * Entries are laid out by directed-edge slot: slot(prev, k) = offset[prev] + k
 * where k is the position of curr in prev's adjacency. A draw from slot
 * (prev, curr) returning position k in curr's adjacency leads directly to
 * slot(curr, k), so walking never searches the table.
 */
class AliasTable {
 public:
  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<AliasEntry>& entries() const noexcept { return entries_; }

  std::size_t slot(std::size_t prev_index, std::size_t position) const {
    return offsets_[prev_index] + position;
  }
  const AliasEntry& at_slot(std::size_t s) const { return entries_[s]; }
  /** Entry for the directed edge (prev, curr); throws LookupError if absent. */
  const AliasEntry& entry(const Graph& g, NodeId prev, NodeId curr) const;

 private:
  friend AliasTable build_alias_table(const Graph&, double, double);
  friend AliasTable build_alias_table_serial(const Graph&, double, double);

  double p_ = 1.0;
  double q_ = 1.0;
  std::vector<std::size_t> offsets_;
  std::vector<AliasEntry> entries_;
};

/**
 * Unnormalized weights for leaving `curr` after `prev`, over curr's adjacency:
 * 1/p back to prev, 1 to common neighbors of prev and curr, 1/q otherwise.
 */
std::vector<double> transition_weights(const Graph& g, std::size_t prev_index,
                                       std::size_t curr_index, double p, double q);

/** Builds every directed-edge entry; entries are filled in parallel under OpenMP. */
AliasTable build_alias_table(const Graph& g, double p, double q);
/** Serial reference for build_alias_table. */
AliasTable build_alias_table_serial(const Graph& g, double p, double q);

NodeId alias_draw(const AliasEntry& entry, Rng& rng);

using Walk = std::vector<NodeId>;

enum class WalkMode { AliasWeighted, Restart };

struct WalkParams {
  std::size_t length = 80;        ///< steps per walk (walk holds length + 1 nodes)
  std::size_t walks_per_node = 10;
  double p = 1.0;
  double q = 1.0;
  double c = 0.1;                 ///< probability of stepping to a neighbor (restart mode)
  WalkMode mode = WalkMode::AliasWeighted;

  /** Throws ValidationError when a field is out of range. */
  void validate() const;
};

/** First step uniform over N(x); later steps drawn from the (prev, curr) entry. */
Walk weighted_walk(const Graph& g, const AliasTable& table, NodeId x, std::size_t length, Rng& rng);

/** Each step moves to a uniform neighbor with probability c, else back to x. */
Walk restart_walk(const Graph& g, NodeId x, std::size_t length, double c, Rng& rng);

/**
 * `walks_per_node` rounds over g.nodes(), one walk per node per round, all
 * drawn from a single stream seeded with `seed`.
 */
std::vector<Walk> generate_corpus(const Graph& g, const WalkParams& params, std::uint64_t seed);

}  // namespace linkpred
