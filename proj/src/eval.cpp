#include "linkpred/eval.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <ostream>

#include "linkpred/error.hpp"
#include "linkpred/format.hpp"

namespace linkpred {

namespace {

constexpr double kZ95 = 1.96;

std::size_t sample_uniform_non_edge(const Graph& g, Rng& rng, std::size_t& other) {
  const std::size_t n = g.num_nodes();
  if (g.num_edges() >= n * (n - 1) / 2) throw ValidationError("complete graph has no nonexistent pairs");
  for (;;) {
    const std::size_t i = uniform_index(rng, n);
    const std::size_t j = uniform_index(rng, n);
    if (i != j && !g.has_edge_at(i, j)) {
      other = j;
      return i;
    }
  }
}

}  // namespace

AucTally estimate_auc(const Graph& train, std::span<const Edge> test, const Scorer& scorer, std::size_t n,
                      std::uint64_t seed, NonEdgeSampling sampling) {
  if (test.empty()) throw ValidationError("empty test set");
  if (n == 0) throw ValidationError("number of comparisons must be >= 1");
  if (train.empty()) throw ValidationError("empty training graph");

  Rng rng(seed);
  AucTally tally;
  tally.n = n;
  for (std::size_t round = 0; round < n; ++round) {
    const Edge& e = test[uniform_index(rng, test.size())];
    const double existing = train.contains(e.u) && train.contains(e.v) ? scorer(train, e.u, e.v) : 0.0;

    std::size_t a = 0;
    std::size_t b = 0;
    if (sampling == NonEdgeSampling::NodeThenNonNeighbor) {
      a = uniform_index(rng, train.num_nodes());
      b = sample_non_neighbor_at(train, a, rng);
    } else {
      a = sample_uniform_non_edge(train, rng, b);
    }
    const double nonexistent = scorer(train, train.node_at(a), train.node_at(b));
    if (existing > nonexistent) {
      ++tally.n_higher;
    } else {
      ++tally.n_not_higher;
    }
  }
  return tally;
}

AucTally estimate_auc(const EdgePartition& partition, const Scorer& scorer, std::size_t n, std::uint64_t seed,
                      NonEdgeSampling sampling) {
  const Graph train = Graph::from_edges(partition.train);
  return estimate_auc(train, partition.test, scorer, n, seed, sampling);
}

std::vector<std::string> ExperimentResult::levels() const {
  std::vector<std::string> out;
  for (const auto& r : records) {
    if (std::find(out.begin(), out.end(), r.level) == out.end()) out.push_back(r.level);
  }
  return out;
}

std::vector<double> ExperimentResult::values(const std::string& level) const {
  std::vector<double> out;
  for (const auto& r : records) {
    if (r.level == level) out.push_back(r.auc);
  }
  return out;
}

ExperimentResult run_experiment(const Graph& g_full, std::span<const Level> levels, const ExperimentOptions& options) {
  if (options.trials < 1) throw ValidationError("trials must be >= 1");
  if (levels.empty()) throw ValidationError("at least one level is required");
  if (options.jobs < 1) throw ValidationError("jobs must be >= 1");

  const std::size_t n_levels = levels.size();
  std::vector<ExperimentRecord> records(options.trials * n_levels);
  std::exception_ptr failure;

  #pragma omp parallel for schedule(dynamic, 1) num_threads(options.jobs) if (options.jobs > 1)
  for (std::ptrdiff_t tt = 0; tt < static_cast<std::ptrdiff_t>(options.trials); ++tt) {
    const auto t = static_cast<std::size_t>(tt);
    try {
      const std::uint64_t trial_seed = options.base_seed + t;
      const EdgePartition part = split_edges(g_full, options.test_fraction, trial_seed);
      const Graph train = Graph::from_edges(part.train);
      for (std::size_t l = 0; l < n_levels; ++l) {
        const Scorer scorer = levels[l].make(train, part, mix_seed(trial_seed, 1));
        const AucTally tally =
            estimate_auc(train, part.test, scorer, options.comparisons, mix_seed(trial_seed, 2), options.sampling);
        records[t * n_levels + l] = {trial_seed, levels[l].tag, tally.auc()};
      }
    } catch (...) {
      #pragma omp critical(linkpred_experiment_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return ExperimentResult{std::move(records)};
}

Summary summarize_values(const std::string& level, std::span<const double> values) {
  if (values.size() < 2) throw ValidationError("summary of '" + level + "' needs at least 2 trials");
  Summary s;
  s.level = level;
  s.count = values.size();
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / n;
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.std = std::sqrt(ss / (n - 1.0));
  s.stderr_ = s.std / std::sqrt(n);
  s.ci_low = s.mean - kZ95 * s.stderr_;
  s.ci_high = s.mean + kZ95 * s.stderr_;
  return s;
}

std::vector<Summary> summarize(const ExperimentResult& result) {
  std::vector<Summary> out;
  for (const auto& level : result.levels()) out.push_back(summarize_values(level, result.values(level)));
  return out;
}

Summary paired_difference(const ExperimentResult& result, const std::string& a, const std::string& b) {
  std::map<std::uint64_t, double> av;
  std::map<std::uint64_t, double> bv;
  for (const auto& r : result.records) {
    if (r.level == a) av[r.trial_seed] = r.auc;
    if (r.level == b) bv[r.trial_seed] = r.auc;
  }
  if (av.size() != bv.size()) throw ValidationError("levels '" + a + "' and '" + b + "' are not paired");
  std::vector<double> diff;
  for (const auto& [seed, x] : av) {
    auto it = bv.find(seed);
    if (it == bv.end()) throw ValidationError("levels '" + a + "' and '" + b + "' are not paired");
    diff.push_back(x - it->second);
  }
  return summarize_values(a + "-" + b, diff);
}

void write_records_csv(const ExperimentResult& result, std::ostream& out) {
  out << "trial_seed,level,auc\n";
  for (const auto& r : result.records) out << r.trial_seed << ',' << r.level << ',' << format_double(r.auc) << '\n';
}

void write_summary_csv(std::span<const Summary> summaries, std::ostream& out) {
  out << "level,mean,std,stderr,ci_low,ci_high\n";
  for (const auto& s : summaries) {
    out << s.level << ',' << format_double(s.mean) << ',' << format_double(s.std) << ','
        << format_double(s.stderr_) << ',' << format_double(s.ci_low) << ',' << format_double(s.ci_high) << '\n';
  }
}

}  // namespace linkpred
