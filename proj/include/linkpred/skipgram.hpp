#pragma once
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linkpred/graph.hpp"
#include "linkpred/walks.hpp"

namespace linkpred {

/**
 * Node embeddings: `input` rows are the embedding vectors, `output` rows the
 * context-side vectors used only while training. Row r belongs to nodes[r].
 */
struct EmbeddingModel {
  std::size_t dim = 0;
  std::vector<NodeId> nodes;
  std::unordered_map<NodeId, std::size_t> vocab;
  std::vector<double> input;
  std::vector<double> output;

  std::size_t rows() const noexcept { return nodes.size(); }
  bool contains(NodeId u) const { return vocab.contains(u); }
  /** Row index of u; throws LookupError("unembedded node ...") when absent. */
  std::size_t row_of(NodeId u) const;
  std::span<double> input_row(std::size_t r) { return {input.data() + r * dim, dim}; }
  std::span<const double> input_row(std::size_t r) const { return {input.data() + r * dim, dim}; }
  std::span<double> output_row(std::size_t r) { return {output.data() + r * dim, dim}; }
  std::span<const double> output_row(std::size_t r) const { return {output.data() + r * dim, dim}; }
  std::span<const double> vector_of(NodeId u) const { return input_row(row_of(u)); }
};

struct TrainConfig {
  std::size_t dim = 128;
  std::size_t window = 10;
  std::size_t epochs = 10;
  std::size_t negatives = 5;
  double lr_initial = 0.025;
  double lr_final = 0.0001;
  std::uint64_t seed = 1;
  /** Single-threaded reproducible training. When false, pairs are processed
   *  by OpenMP threads with unsynchronized updates and results vary run to run. */
  bool deterministic = true;

  void validate() const;
};

/** Ordered (center, context) pair of vocabulary rows. */
using RowPair = std::pair<std::uint32_t, std::uint32_t>;

/**
 * Every (walk[i], walk[j]) with j != i and |i - j| <= window, walk by walk,
 * position by position, contexts left to right.
 */
std::vector<std::pair<NodeId, NodeId>> pair_stream(std::span<const Walk> corpus, std::size_t window);

/** Vocabulary in first-occurrence order, with zeroed tables of width dim. */
EmbeddingModel make_vocabulary(std::span<const Walk> corpus, std::size_t dim);

/**
 * Negative-sampling loss for one (center, context) pair:
 * -log σ(u_ctx·v_c) - Σ_neg log σ(-u_neg·v_c). Arguments are model rows.
 */
double sgns_loss(const EmbeddingModel& m, std::size_t center, std::size_t context,
                 std::span<const std::size_t> negatives);

struct SgnsGradient {
  std::vector<double> center;                                  ///< dL/dv_center
  std::vector<std::pair<std::size_t, std::vector<double>>> outputs;  ///< dL/du_row, one per target
};
SgnsGradient sgns_gradient(const EmbeddingModel& m, std::size_t center, std::size_t context,
                           std::span<const std::size_t> negatives);

/**
 * One gradient-descent step on sgns_loss. Gradients are taken at the current
 * parameters and then applied. Returns the loss before the update.
 */
double sgns_step(EmbeddingModel& m, std::size_t center, std::size_t context,
                 std::span<const std::size_t> negatives, double lr);

struct TrainResult {
  EmbeddingModel model;
  std::vector<double> epoch_loss;  ///< mean loss per positive pair, per epoch
};

/**
 * Input rows start uniform in [-0.5/d, 0.5/d], output rows at zero. Each epoch
 * shuffles the pair stream; the learning rate decays linearly from lr_initial
 * to lr_final over all steps; negatives come from corpus frequency^0.75.
 */
TrainResult train(std::span<const Walk> corpus, const TrainConfig& config);

/** "<count> <dim>" then one "<node-id> <v1> ... <vd>" line per row. */
void save_embedding(const EmbeddingModel& m, std::ostream& out);
void save_embedding_file(const EmbeddingModel& m, const std::filesystem::path& path);
/** Reads input vectors only; output rows are left empty. */
EmbeddingModel load_embedding(std::istream& in);
EmbeddingModel load_embedding_file(const std::filesystem::path& path);

double cosine_similarity(std::span<const double> a, std::span<const double> b);

}  // namespace linkpred
