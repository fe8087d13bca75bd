#include "linkpred/predictor.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "linkpred/error.hpp"

namespace linkpred {

namespace {

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

/** log(1 + e^z) without overflow. */
double softplus(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

std::uint64_t pair_key(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
}

double margin(const LogisticModel& m, std::span<const double> x) {
  double z = m.bias;
  for (std::size_t i = 0; i < x.size(); ++i) z += m.weights[i] * x[i];
  return z;
}

}  // namespace

std::string_view to_string(EdgeFeatureOperator op) {
  switch (op) {
    case EdgeFeatureOperator::Hadamard: return "hadamard";
    case EdgeFeatureOperator::Average: return "average";
    case EdgeFeatureOperator::AbsDiff: return "absdiff";
  }
  return "?";
}

std::optional<EdgeFeatureOperator> parse_operator(std::string_view name) {
  for (auto op : {EdgeFeatureOperator::Hadamard, EdgeFeatureOperator::Average, EdgeFeatureOperator::AbsDiff}) {
    if (to_string(op) == name) return op;
  }
  return std::nullopt;
}

void edge_features_into(std::span<const double> a, std::span<const double> b, EdgeFeatureOperator op,
                        std::span<double> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    switch (op) {
      case EdgeFeatureOperator::Hadamard: out[i] = a[i] * b[i]; break;
      case EdgeFeatureOperator::Average: out[i] = 0.5 * (a[i] + b[i]); break;
      case EdgeFeatureOperator::AbsDiff: out[i] = std::abs(a[i] - b[i]); break;
    }
  }
}

std::vector<double> edge_features(const EmbeddingModel& emb, NodeId u, NodeId v, EdgeFeatureOperator op) {
  std::vector<double> out(emb.dim);
  edge_features_into(emb.vector_of(u), emb.vector_of(v), op, out);
  return out;
}

TrainingSet build_training_set(std::span<const Edge> train_edges, const Graph& g_train,
                               const EmbeddingModel& emb, EdgeFeatureOperator op, std::uint64_t seed,
                               std::span<const Edge> excluded) {
  const std::size_t n = g_train.num_nodes();
  const std::size_t wanted = train_edges.size();

  std::unordered_set<std::uint64_t> forbidden;
  for (const Edge& e : excluded) {
    auto i = g_train.find_index(e.u);
    auto j = g_train.find_index(e.v);
    if (i && j && *i != *j && !g_train.has_edge_at(*i, *j)) forbidden.insert(pair_key(*i, *j));
  }
  const std::size_t all_pairs = n < 2 ? 0 : n * (n - 1) / 2;
  const std::size_t available = all_pairs - g_train.num_edges() - forbidden.size();
  if (available < wanted) {
    throw ValidationError("graph too dense: " + std::to_string(available) + " non-edges available, " +
                          std::to_string(wanted) + " negatives needed");
  }

  TrainingSet data;
  data.dim = emb.dim;
  data.features.resize(2 * wanted * emb.dim);
  data.labels.reserve(2 * wanted);
  auto put = [&](NodeId u, NodeId v, int label) {
    const std::size_t r = data.labels.size();
    edge_features_into(emb.vector_of(u), emb.vector_of(v), op,
                       std::span<double>(data.features.data() + r * emb.dim, emb.dim));
    data.labels.push_back(label);
  };
  for (const Edge& e : train_edges) put(e.u, e.v, 1);

  Rng rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  while (chosen.size() < wanted) {
    const std::size_t i = uniform_index(rng, n);
    const std::size_t j = uniform_index(rng, n);
    if (i == j || g_train.has_edge_at(i, j)) continue;
    const std::uint64_t key = pair_key(i, j);
    if (forbidden.contains(key) || !chosen.insert(key).second) continue;
    put(g_train.node_at(i), g_train.node_at(j), 0);
  }
  return data;
}

double logistic_loss(const LogisticModel& m, const TrainingSet& data) {
  double total = 0.0;
  for (std::size_t r = 0; r < data.rows(); ++r) {
    const double z = margin(m, data.row(r));
    total += data.labels[r] ? softplus(-z) : softplus(z);
  }
  double norm2 = 0.0;
  for (double w : m.weights) norm2 += w * w;
  return total / static_cast<double>(data.rows()) + 0.5 * m.reg_lambda * norm2;
}

LogisticGradient logistic_gradient(const LogisticModel& m, const TrainingSet& data) {
  LogisticGradient g;
  g.weights.assign(data.dim, 0.0);
  for (std::size_t r = 0; r < data.rows(); ++r) {
    auto x = data.row(r);
    const double err = sigmoid(margin(m, x)) - static_cast<double>(data.labels[r]);
    for (std::size_t i = 0; i < data.dim; ++i) g.weights[i] += err * x[i];
    g.bias += err;
  }
  const double inv_n = 1.0 / static_cast<double>(data.rows());
  for (std::size_t i = 0; i < data.dim; ++i) g.weights[i] = g.weights[i] * inv_n + m.reg_lambda * m.weights[i];
  g.bias *= inv_n;
  return g;
}

double logistic_smoothness(const TrainingSet& data, double reg_lambda) {
  double max_norm2 = 0.0;
  for (std::size_t r = 0; r < data.rows(); ++r) {
    double s = 1.0;
    for (double x : data.row(r)) s += x * x;
    max_norm2 = std::max(max_norm2, s);
  }
  return 0.25 * max_norm2 + reg_lambda;
}

LogisticModel train_logistic(const TrainingSet& data, const LogisticConfig& config) {
  if (data.rows() == 0) throw ValidationError("logistic regression needs at least one row");
  if (!(config.reg_lambda >= 0.0)) throw ValidationError("reg_lambda must be >= 0");
  if (!(config.lr > 0.0)) throw ValidationError("learning rate must be positive");
  for (double x : data.features) {
    if (!std::isfinite(x)) throw ValidationError("non-finite feature value");
  }
  LogisticModel m;
  m.weights.assign(data.dim, 0.0);
  m.reg_lambda = config.reg_lambda;
  const double step = std::min(config.lr, 1.0 / logistic_smoothness(data, config.reg_lambda));
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    const LogisticGradient g = logistic_gradient(m, data);
    for (std::size_t i = 0; i < data.dim; ++i) m.weights[i] -= step * g.weights[i];
    m.bias -= step * g.bias;
  }
  return m;
}

double predict_score(const LogisticModel& m, std::span<const double> feature) {
  if (feature.size() != m.weights.size()) {
    throw ValidationError("feature width " + std::to_string(feature.size()) + " does not match model width " +
                          std::to_string(m.weights.size()));
  }
  return sigmoid(margin(m, feature));
}

}  // namespace linkpred
