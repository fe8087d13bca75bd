#pragma once
#include <string>

#include "linkpred/eval.hpp"
#include "linkpred/local_indices.hpp"
#include "linkpred/predictor.hpp"
#include "linkpred/skipgram.hpp"
#include "linkpred/walks.hpp"

namespace linkpred {

/** Walks -> skip-gram -> logistic classifier, refit on every training graph. */
struct EmbedPipelineConfig {
  WalkParams walks;
  TrainConfig train;
  EdgeFeatureOperator op = EdgeFeatureOperator::Hadamard;
  LogisticConfig logistic;
  /** Keep withheld test edges out of the classifier's negative examples. */
  bool exclude_test_from_negatives = false;
};

Level local_index_level(LocalIndexKind kind);
/** Tagged "rwr" unless a tag is given. */
Level rwr_level(double c, std::string tag = "rwr");
Level embed_level(const EmbedPipelineConfig& config, std::string tag = "embed");

}  // namespace linkpred
