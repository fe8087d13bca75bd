#pragma once
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "linkpred/graph.hpp"
#include "linkpred/skipgram.hpp"

namespace linkpred {

/** How two node vectors combine into one edge feature of the same width. */
enum class EdgeFeatureOperator {
  Hadamard,  ///< a_i * b_i
  Average,   ///< (a_i + b_i) / 2
  AbsDiff,   ///< |a_i - b_i|
};

std::string_view to_string(EdgeFeatureOperator op);
std::optional<EdgeFeatureOperator> parse_operator(std::string_view name);

/** Throws LookupError("unembedded node ...") if either node has no vector. */
std::vector<double> edge_features(const EmbeddingModel& emb, NodeId u, NodeId v,
                                  EdgeFeatureOperator op = EdgeFeatureOperator::Hadamard);
void edge_features_into(std::span<const double> a, std::span<const double> b, EdgeFeatureOperator op,
                        std::span<double> out);

/** Row-major feature matrix with 0/1 labels. */
struct TrainingSet {
  std::size_t dim = 0;
  std::vector<double> features;
  std::vector<int> labels;

  std::size_t rows() const noexcept { return labels.size(); }
  std::span<const double> row(std::size_t r) const { return {features.data() + r * dim, dim}; }
};

/**
 * Positives: every training edge. Negatives: as many distinct uniformly drawn
 * node pairs of g_train (u != v) that are not edges of g_train, plus not in
 * `excluded` when given. Throws ValidationError when too few non-edges exist.
 */
TrainingSet build_training_set(std::span<const Edge> train_edges, const Graph& g_train,
                               const EmbeddingModel& emb, EdgeFeatureOperator op, std::uint64_t seed,
                               std::span<const Edge> excluded = {});

struct LogisticModel {
  std::vector<double> weights;
  double bias = 0.0;
  double reg_lambda = 0.0;
};

struct LogisticConfig {
  double reg_lambda = 1e-4;
  double lr = 0.1;
  std::size_t epochs = 500;
};

/** Mean cross-entropy + (reg_lambda / 2) ||w||². The bias is not penalized. */
double logistic_loss(const LogisticModel& m, const TrainingSet& data);

struct LogisticGradient {
  std::vector<double> weights;
  double bias = 0.0;
};
LogisticGradient logistic_gradient(const LogisticModel& m, const TrainingSet& data);

/**
 * Upper bound on the curvature of logistic_loss:
 * max_r (||x_r||² + 1) / 4 + reg_lambda.
 */
double logistic_smoothness(const TrainingSet& data, double reg_lambda);

/**
 * Full-batch gradient descent from zero weights. The step is
 * min(config.lr, 1 / logistic_smoothness), which keeps every iteration a
 * descent step. Throws ValidationError on empty or non-finite features.
 */
LogisticModel train_logistic(const TrainingSet& data, const LogisticConfig& config);

/** σ(w·x + b). Throws ValidationError when the feature width differs from w. */
double predict_score(const LogisticModel& m, std::span<const double> feature);

}  // namespace linkpred
