#pragma once
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "linkpred/graph.hpp"

namespace linkpred {

/** Outcome counts of n existing-vs-nonexistent comparisons. */
struct AucTally {
  std::size_t n = 0;
  std::size_t n_higher = 0;      ///< existing edge scored strictly higher
  std::size_t n_not_higher = 0;  ///< existing edge scored lower or equal

  /** (n_higher + 0.5 n_not_higher) / n */
  double auc() const {
    return (static_cast<double>(n_higher) + 0.5 * static_cast<double>(n_not_higher)) / static_cast<double>(n);
  }
};

/** Score of a candidate pair, evaluated on the training graph. */
using Scorer = std::function<double(const Graph& train, NodeId u, NodeId v)>;

/**
 * One compared level: a tag for output plus a factory that prepares a scorer
 * for a given training graph (fitting models when the method needs them).
 * Factories must be safe to call concurrently.
 */
struct Level {
  std::string tag;
  std::function<Scorer(const Graph& train, const EdgePartition& partition, std::uint64_t seed)> make;
};

enum class NonEdgeSampling {
  NodeThenNonNeighbor,  ///< uniform node, then uniform non-neighbor of it
  UniformPair,          ///< uniform over unordered non-adjacent pairs
};

/**
 * n rounds of: uniform test edge (scored 0 when an endpoint is missing from
 * `train`) against one sampled nonexistent pair of `train`. Throws
 * ValidationError on an empty test set or n == 0, and propagates the
 * saturated-node error from the non-edge sampler.
 */
AucTally estimate_auc(const Graph& train, std::span<const Edge> test, const Scorer& scorer, std::size_t n,
                      std::uint64_t seed, NonEdgeSampling sampling = NonEdgeSampling::NodeThenNonNeighbor);

/** Builds the training graph from partition.train and evaluates on partition.test. */
AucTally estimate_auc(const EdgePartition& partition, const Scorer& scorer, std::size_t n, std::uint64_t seed,
                      NonEdgeSampling sampling = NonEdgeSampling::NodeThenNonNeighbor);

struct ExperimentOptions {
  std::size_t trials = 100;
  double test_fraction = 0.1;
  std::size_t comparisons = 1000;
  std::uint64_t base_seed = 0;
  /** Trials run on up to this many OpenMP threads; 1 is the serial path. */
  int jobs = 1;
  NonEdgeSampling sampling = NonEdgeSampling::NodeThenNonNeighbor;
};

struct ExperimentRecord {
  std::uint64_t trial_seed = 0;
  std::string level;
  double auc = 0.0;
};

/** Records ordered by trial, then by level in the order given. */
struct ExperimentResult {
  std::vector<ExperimentRecord> records;

  std::vector<std::string> levels() const;
  /** AUC values of one level, in trial order. */
  std::vector<double> values(const std::string& level) const;
};

/**
 * Trial t uses partition seed base_seed + t and evaluates every level on that
 * same partition, with the same comparison stream. Output does not depend on
 * `jobs`.
 */
ExperimentResult run_experiment(const Graph& g_full, std::span<const Level> levels, const ExperimentOptions& options);

struct Summary {
  std::string level;
  std::size_t count = 0;
  double mean = 0.0;
  double std = 0.0;
  double stderr_ = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

/** Mean, unbiased sample std, std/sqrt(n), mean ± 1.96 SE. Needs >= 2 values. */
Summary summarize_values(const std::string& level, std::span<const double> values);
std::vector<Summary> summarize(const ExperimentResult& result);
/** Summary of per-trial differences a - b, matched by trial seed. */
Summary paired_difference(const ExperimentResult& result, const std::string& a, const std::string& b);

/** Header `trial_seed,level,auc`. */
void write_records_csv(const ExperimentResult& result, std::ostream& out);
/** Header `level,mean,std,stderr,ci_low,ci_high`. */
void write_summary_csv(std::span<const Summary> summaries, std::ostream& out);

}  // namespace linkpred
