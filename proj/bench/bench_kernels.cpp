// Serial reference vs OpenMP kernel timings.
#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "linkpred/eval.hpp"
#include "linkpred/methods.hpp"
#include "linkpred/rwr.hpp"
#include "linkpred/skipgram.hpp"
#include "linkpred/walks.hpp"
#include "synthetic.hpp"

using namespace linkpred;

namespace {

double best_of(int repeat, const std::function<void()>& fn) {
  double best = INFINITY;
  for (int i = 0; i < repeat; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void report(const char* kernel, double serial, double parallel, bool same) {
  std::printf("%-22s %10.4f %10.4f %8.2fx  %s\n", kernel, serial, parallel, serial / parallel,
              same ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel benchmark"};
  int repeat = 3;
  int nodes = 400;
  int threads = omp_get_max_threads();
  app.add_option("--repeat", repeat, "Best of this many runs")->check(CLI::PositiveNumber);
  app.add_option("--nodes", nodes, "Nodes in the synthetic graph")->check(CLI::Range(20, 100000));
  app.add_option("--threads", threads, "OpenMP threads for the parallel side")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);
  omp_set_num_threads(threads);

  const Graph g = testing::preferential_attachment(nodes, 5, 1);
  std::printf("graph: %zu nodes, %zu edges; %d threads\n", g.num_nodes(), g.num_edges(), threads);
  std::printf("%-22s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");

  {
    AliasTable a;
    AliasTable b;
    const double ts = best_of(repeat, [&] { a = build_alias_table_serial(g, 0.5, 2.0); });
    const double tp = best_of(repeat, [&] { b = build_alias_table(g, 0.5, 2.0); });
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) {
      same = a.at_slot(i).arrays.prob == b.at_slot(i).arrays.prob && a.at_slot(i).arrays.alias == b.at_slot(i).arrays.alias;
    }
    report("alias table", ts, tp, same);
  }
  {
    const Matrix p = build_transition(g);
    Matrix a;
    Matrix b;
    const double ts = best_of(repeat, [&] { a = rwr_resolvent_serial(p, 0.9); });
    const double tp = best_of(repeat, [&] { b = rwr_resolvent(p, 0.9); });
    double gap = 0.0;
    for (std::size_t i = 0; i < g.num_nodes(); ++i) {
      for (std::size_t j = 0; j < g.num_nodes(); ++j) gap = std::max(gap, std::abs(a(i, j) - b(i, j)));
    }
    report("rwr resolvent", ts, tp, gap < 1e-10);
  }
  {
    const std::vector<Level> levels = {local_index_level(LocalIndexKind::AdamicAdar), rwr_level(0.9)};
    ExperimentOptions opt;
    opt.trials = 8;
    ExperimentResult a;
    ExperimentResult b;
    const double ts = best_of(repeat, [&] { a = run_experiment(g, levels, opt); });
    opt.jobs = threads;
    const double tp = best_of(repeat, [&] { b = run_experiment(g, levels, opt); });
    bool same = a.records.size() == b.records.size();
    for (std::size_t i = 0; same && i < a.records.size(); ++i) same = a.records[i].auc == b.records[i].auc;
    report("experiment trials", ts, tp, same);
  }
  {
    WalkParams wp;
    wp.length = 40;
    wp.walks_per_node = 5;
    const auto corpus = generate_corpus(g, wp, 2);
    TrainConfig cfg;
    cfg.dim = 64;
    cfg.window = 5;
    cfg.epochs = 2;
    const double ts = best_of(repeat, [&] { train(corpus, cfg); });
    cfg.deterministic = false;
    const double tp = best_of(repeat, [&] { train(corpus, cfg); });
    // Unsynchronized updates: results are not expected to match.
    std::printf("%-22s %10.4f %10.4f %8.2fx  %s\n", "sgns training", ts, tp, ts / tp, "n/a");
  }
  return 0;
}
