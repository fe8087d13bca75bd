#include "linkpred/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "linkpred/error.hpp"
#include "linkpred/eval.hpp"
#include "linkpred/format.hpp"
#include "linkpred/graph.hpp"
#include "linkpred/methods.hpp"
#include "linkpred/skipgram.hpp"
#include "linkpred/walks.hpp"

namespace linkpred {

namespace {

struct RunConfig {
  std::string input;
  std::string method = "cn";
  std::string output;
  std::string summary_output;

  // rwr and restart walks
  double c = 0.9;
  // walks
  double p = 1.0;
  double q = 1.0;
  std::size_t r = 10;
  std::size_t l = 80;
  std::string mode = "alias";
  // skip-gram
  std::size_t d = 128;
  std::size_t k = 10;
  std::size_t epochs = 10;
  std::size_t negatives = 5;
  double sg_lr = 0.025;
  bool fast = false;
  // classifier
  std::string op = "hadamard";
  double lambda = 1e-4;
  double lr = 0.1;
  std::size_t logistic_epochs = 500;
  bool exclude_test = false;

  // experiment
  std::size_t trials = 100;
  std::size_t n = 1000;
  double test_fraction = 0.1;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string sampling = "node";

  // sweep
  std::string param;
  std::vector<std::string> levels;
};

void add_walk_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--p", cfg.p, "Return weight parameter p (weight 1/p)")->capture_default_str();
  app->add_option("--q", cfg.q, "In-out weight parameter q (weight 1/q)")->capture_default_str();
  app->add_option("--r", cfg.r, "Walks per node")->capture_default_str();
  app->add_option("--l", cfg.l, "Steps per walk")->capture_default_str();
  app->add_option("--mode", cfg.mode, "Walk mode")->check(CLI::IsMember({"alias", "restart"}))->capture_default_str();
  app->add_option("--d", cfg.d, "Embedding dimension")->capture_default_str();
  app->add_option("--k", cfg.k, "Context window radius")->capture_default_str();
  app->add_option("--epochs", cfg.epochs, "Skip-gram epochs")->capture_default_str();
  app->add_option("--negatives", cfg.negatives, "Negative samples per pair")->capture_default_str();
  app->add_option("--sg-lr", cfg.sg_lr, "Initial skip-gram learning rate")->capture_default_str();
  app->add_flag("--fast", cfg.fast, "Parallel unsynchronized skip-gram training (non-deterministic)");
}

void add_classifier_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--operator", cfg.op, "Edge feature operator")
      ->check(CLI::IsMember({"hadamard", "average", "absdiff"}))
      ->capture_default_str();
  app->add_option("--lambda", cfg.lambda, "L2 penalty of the logistic classifier")->capture_default_str();
  app->add_option("--lr", cfg.lr, "Logistic regression learning rate")->capture_default_str();
  app->add_option("--logistic-epochs", cfg.logistic_epochs, "Full-batch logistic iterations")->capture_default_str();
  app->add_flag("--exclude-test", cfg.exclude_test, "Keep test edges out of the classifier's negatives");
}

void add_experiment_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--trials", cfg.trials, "Number of paired partitions")->capture_default_str();
  app->add_option("--n", cfg.n, "Comparisons per AUC estimate")->capture_default_str();
  app->add_option("--test-fraction", cfg.test_fraction, "Fraction of edges withheld")->capture_default_str();
  app->add_option("--seed", cfg.seed, "Base seed; trial t uses seed + t")->capture_default_str();
  app->add_option("--jobs", cfg.jobs, "Trials evaluated in parallel")->capture_default_str();
  app->add_option("--sampling", cfg.sampling, "Nonexistent-pair sampling")
      ->check(CLI::IsMember({"node", "uniform"}))
      ->capture_default_str();
}

EmbedPipelineConfig pipeline_config(const RunConfig& cfg) {
  EmbedPipelineConfig pc;
  pc.walks.p = cfg.p;
  pc.walks.q = cfg.q;
  pc.walks.c = cfg.c;
  pc.walks.walks_per_node = cfg.r;
  pc.walks.length = cfg.l;
  pc.walks.mode = cfg.mode == "restart" ? WalkMode::Restart : WalkMode::AliasWeighted;
  pc.walks.validate();
  pc.train.dim = cfg.d;
  pc.train.window = cfg.k;
  pc.train.epochs = cfg.epochs;
  pc.train.negatives = cfg.negatives;
  pc.train.lr_initial = cfg.sg_lr;
  pc.train.deterministic = !cfg.fast;
  pc.train.validate();
  pc.op = *parse_operator(cfg.op);
  pc.logistic.reg_lambda = cfg.lambda;
  pc.logistic.lr = cfg.lr;
  pc.logistic.epochs = cfg.logistic_epochs;
  pc.exclude_test_from_negatives = cfg.exclude_test;
  return pc;
}

ExperimentOptions experiment_options(const RunConfig& cfg) {
  if (cfg.trials < 1) throw ValidationError("--trials must be >= 1");
  if (cfg.n < 1) throw ValidationError("--n must be >= 1");
  if (!(cfg.test_fraction > 0.0 && cfg.test_fraction < 1.0)) throw ValidationError("--test-fraction must lie in (0, 1)");
  if (cfg.jobs < 1) throw ValidationError("--jobs must be >= 1");
  ExperimentOptions opt;
  opt.trials = cfg.trials;
  opt.comparisons = cfg.n;
  opt.test_fraction = cfg.test_fraction;
  opt.base_seed = cfg.seed;
  opt.jobs = cfg.jobs;
  opt.sampling = cfg.sampling == "uniform" ? NonEdgeSampling::UniformPair : NonEdgeSampling::NodeThenNonNeighbor;
  return opt;
}

Level method_level(const RunConfig& cfg) {
  if (auto kind = parse_local_index(cfg.method)) return local_index_level(*kind);
  if (cfg.method == "rwr") {
    if (!(cfg.c >= 0.0 && cfg.c < 1.0)) throw ValidationError("--c must lie in [0, 1) for rwr");
    return rwr_level(cfg.c);
  }
  if (cfg.method == "embed") return embed_level(pipeline_config(cfg));
  throw ValidationError("unknown method '" + cfg.method + "'");
}

Graph load_input(const RunConfig& cfg, std::ostream& err) {
  LoadResult loaded = load_edge_list_file(cfg.input);
  if (loaded.self_loops_dropped > 0) err << "warning: dropped " << loaded.self_loops_dropped << " self-loop line(s)\n";
  return std::move(loaded.graph);
}

std::string default_summary_path(const std::string& out) {
  const auto dot = out.rfind('.');
  const auto slash = out.find_last_of("/\\");
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return out + ".summary.csv";
  return out.substr(0, dot) + ".summary" + out.substr(dot);
}

void write_outputs(const ExperimentResult& result, const RunConfig& cfg, std::ostream& out) {
  const auto summaries = cfg.trials >= 2 ? summarize(result) : std::vector<Summary>{};
  if (cfg.output.empty()) {
    write_records_csv(result, out);
    if (!summaries.empty()) write_summary_csv(summaries, out);
    return;
  }
  std::ofstream records(cfg.output, std::ios::binary);
  if (!records) throw ValidationError("cannot write '" + cfg.output + "'");
  write_records_csv(result, records);
  if (!summaries.empty()) {
    const std::string path = cfg.summary_output.empty() ? default_summary_path(cfg.output) : cfg.summary_output;
    std::ofstream summary(path, std::ios::binary);
    if (!summary) throw ValidationError("cannot write '" + path + "'");
    write_summary_csv(summaries, summary);
  }
  for (const auto& s : summaries) {
    out << s.level << ": mean AUC " << format_double(s.mean) << " (95% CI " << format_double(s.ci_low) << " .. "
        << format_double(s.ci_high) << ")\n";
  }
}

int cmd_stats(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load_input(cfg, err);
  out << "nodes: " << g.num_nodes() << '\n';
  out << "edges: " << g.num_edges() << '\n';
  if (g.num_nodes() == 0) {
    out << "average degree: n/a\n";
  } else {
    const double avg = 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(g.num_nodes());
    out << "average degree: " << std::llround(avg) << " (exact " << format_double(avg) << ")\n";
  }
  return kExitOk;
}

int cmd_auc(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ExperimentOptions opt = experiment_options(cfg);
  const Level level = method_level(cfg);
  const Graph g = load_input(cfg, err);
  const Level levels[] = {level};
  write_outputs(run_experiment(g, levels, opt), cfg, out);
  return kExitOk;
}

int cmd_embed(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const EmbedPipelineConfig pc = pipeline_config(cfg);
  const Graph g = load_input(cfg, err);
  const auto corpus = generate_corpus(g, pc.walks, mix_seed(cfg.seed, 10));
  TrainConfig tc = pc.train;
  tc.seed = mix_seed(cfg.seed, 11);
  const TrainResult trained = train(corpus, tc);
  for (std::size_t e = 0; e < trained.epoch_loss.size(); ++e) {
    out << "epoch " << (e + 1) << " mean loss " << format_double(trained.epoch_loss[e]) << '\n';
  }
  if (cfg.output.empty()) {
    save_embedding(trained.model, out);
  } else {
    save_embedding_file(trained.model, cfg.output);
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ExperimentOptions opt = experiment_options(cfg);
  std::vector<Level> levels;
  if (cfg.param == "index") {
    if (cfg.levels.empty()) {
      for (LocalIndexKind kind : kAllLocalIndices) levels.push_back(local_index_level(kind));
    }
    for (const auto& name : cfg.levels) {
      auto kind = parse_local_index(name);
      if (!kind) throw ValidationError("unknown index '" + name + "'");
      levels.push_back(local_index_level(*kind));
    }
  } else {
    if (cfg.levels.empty()) throw ValidationError("--levels is required for parameter '" + cfg.param + "'");
    for (const auto& text : cfg.levels) {
      RunConfig level_cfg = cfg;
      double value = 0.0;
      try {
        std::size_t used = 0;
        value = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
      } catch (const std::exception&) {
        throw ValidationError("bad level value '" + text + "'");
      }
      const std::string tag = cfg.param + "=" + text;
      if (cfg.method == "rwr" && cfg.param == "c") {
        if (!(value >= 0.0 && value < 1.0)) throw ValidationError("rwr c levels must lie in [0, 1)");
        levels.push_back(rwr_level(value, tag));
      } else if (cfg.method == "embed" && cfg.param == "c") {
        level_cfg.c = value;
        level_cfg.mode = "restart";
        levels.push_back(embed_level(pipeline_config(level_cfg), tag));
      } else if (cfg.method == "embed" && cfg.param == "d") {
        if (!(value >= 1.0) || value != std::floor(value)) throw ValidationError("d levels must be positive integers");
        level_cfg.d = static_cast<std::size_t>(value);
        levels.push_back(embed_level(pipeline_config(level_cfg), tag));
      } else {
        throw ValidationError("unsupported sweep: method '" + cfg.method + "' with parameter '" + cfg.param + "'");
      }
    }
  }
  const Graph g = load_input(cfg, err);
  write_outputs(run_experiment(g, levels, opt), cfg, out);
  return kExitOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Validation: return kExitUsage;
    case ErrorKind::Parse:
    case ErrorKind::Lookup: return kExitData;
    case ErrorKind::Numeric: return kExitNumeric;
  }
  return kExitUsage;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Link prediction with similarity indices, random walk with restart and node embeddings", "linkpred"};
  app.require_subcommand(1);

  auto* stats = app.add_subcommand("stats", "Print node count, edge count and average degree");
  stats->add_option("edgelist", cfg.input, "Edge-list file")->required();

  auto* auc = app.add_subcommand("auc", "Estimate AUC of one method over repeated partitions");
  auc->add_option("edgelist", cfg.input, "Edge-list file")->required();
  auc->add_option("--method", cfg.method, "cn, hub_prom, hub_depr, lhn1, aa, lhn1_var, rwr or embed")
      ->capture_default_str();
  auc->add_option("--c", cfg.c, "RWR / restart-walk step probability c")->capture_default_str();
  auc->add_option("--out", cfg.output, "Per-trial CSV path (stdout when omitted)");
  auc->add_option("--summary", cfg.summary_output, "Summary CSV path (default: <out>.summary.csv)");
  add_walk_options(auc, cfg);
  add_classifier_options(auc, cfg);
  add_experiment_options(auc, cfg);

  auto* embed = app.add_subcommand("embed", "Generate walks, train embeddings and write them");
  embed->add_option("edgelist", cfg.input, "Edge-list file")->required();
  embed->add_option("--c", cfg.c, "Restart-walk step probability c")->capture_default_str();
  embed->add_option("--out", cfg.output, "Embedding file (stdout when omitted)");
  embed->add_option("--seed", cfg.seed, "Seed")->capture_default_str();
  add_walk_options(embed, cfg);

  auto* sweep = app.add_subcommand("sweep", "Paired comparison of parameter levels or index kinds");
  sweep->add_option("edgelist", cfg.input, "Edge-list file")->required();
  sweep->add_option("--method", cfg.method, "rwr or embed (ignored for --param index)")->capture_default_str();
  sweep->add_option("--param", cfg.param, "Swept parameter")->required()->check(CLI::IsMember({"c", "d", "index"}));
  sweep->add_option("--levels", cfg.levels, "Level values (comma separated)")->delimiter(',');
  sweep->add_option("--c", cfg.c, "RWR / restart-walk c for non-swept levels")->capture_default_str();
  sweep->add_option("--out", cfg.output, "Per-trial CSV path (stdout when omitted)");
  sweep->add_option("--summary", cfg.summary_output, "Summary CSV path (default: <out>.summary.csv)");
  add_walk_options(sweep, cfg);
  add_classifier_options(sweep, cfg);
  add_experiment_options(sweep, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (stats->parsed()) return cmd_stats(cfg, out, err);
    if (auc->parsed()) return cmd_auc(cfg, out, err);
    if (embed->parsed()) return cmd_embed(cfg, out, err);
    if (sweep->parsed()) return cmd_sweep(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}

}  // namespace linkpred
