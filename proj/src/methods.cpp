#include "linkpred/methods.hpp"

#include <memory>

#include "linkpred/rwr.hpp"

namespace linkpred {

Level local_index_level(LocalIndexKind kind) {
  return {std::string(to_string(kind)), [kind](const Graph&, const EdgePartition&, std::uint64_t) -> Scorer {
            return [kind](const Graph& g, NodeId u, NodeId v) { return local_score(kind, g, u, v); };
          }};
}

Level rwr_level(double c, std::string tag) {
  return {std::move(tag), [c](const Graph& train, const EdgePartition&, std::uint64_t) -> Scorer {
            auto model = std::make_shared<const RwrModel>(build_rwr(train, c));
            return [model](const Graph&, NodeId u, NodeId v) { return rwr_score(*model, u, v); };
          }};
}

namespace {

struct FittedPipeline {
  EmbeddingModel embedding;
  LogisticModel classifier;
  EdgeFeatureOperator op;
};

}  // namespace

Level embed_level(const EmbedPipelineConfig& config, std::string tag) {
  return {std::move(tag), [config](const Graph& g_train, const EdgePartition& part, std::uint64_t seed) -> Scorer {
            const auto corpus = generate_corpus(g_train, config.walks, mix_seed(seed, 10));
            TrainConfig tc = config.train;
            tc.seed = mix_seed(seed, 11);
            auto fitted = std::make_shared<FittedPipeline>();
            fitted->embedding = linkpred::train(corpus, tc).model;
            fitted->op = config.op;
            std::span<const Edge> excluded;
            if (config.exclude_test_from_negatives) excluded = part.test;
            const TrainingSet data =
                build_training_set(part.train, g_train, fitted->embedding, config.op, mix_seed(seed, 12), excluded);
            fitted->classifier = train_logistic(data, config.logistic);
            std::shared_ptr<const FittedPipeline> frozen = fitted;
            return [frozen](const Graph&, NodeId u, NodeId v) {
              return predict_score(frozen->classifier, edge_features(frozen->embedding, u, v, frozen->op));
            };
          }};
}

}  // namespace linkpred
