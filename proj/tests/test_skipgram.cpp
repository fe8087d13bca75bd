#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "linkpred/error.hpp"
#include "linkpred/skipgram.hpp"
#include "linkpred/walks.hpp"
#include "synthetic.hpp"

using namespace linkpred;
using namespace linkpred::testing;

namespace {

using PairList = std::vector<std::pair<NodeId, NodeId>>;

EmbeddingModel random_model(std::size_t rows, std::size_t dim, Rng& rng, double scale) {
  EmbeddingModel m;
  m.dim = dim;
  for (std::size_t r = 0; r < rows; ++r) {
    m.nodes.push_back(static_cast<NodeId>(r));
    m.vocab[static_cast<NodeId>(r)] = r;
  }
  m.input.resize(rows * dim);
  m.output.resize(rows * dim);
  for (double& x : m.input) x = (uniform01(rng) * 2 - 1) * scale;
  for (double& x : m.output) x = (uniform01(rng) * 2 - 1) * scale;
  return m;
}

double rel_err(double analytic, double numeric) {
  return std::abs(analytic - numeric) / std::max({std::abs(analytic), std::abs(numeric), 1e-6});
}

TrainConfig small_config() {
  TrainConfig c;
  c.dim = 16;
  c.window = 5;
  c.epochs = 5;
  c.seed = 3;
  return c;
}

}  // namespace

TEST_CASE("pair stream enumeration") {
  const std::vector<Walk> one = {{0, 1, 2}};
  CHECK(pair_stream(one, 1) == PairList{{0, 1}, {1, 0}, {1, 2}, {2, 1}});
  CHECK(pair_stream(one, 5) == PairList{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});
  const std::vector<Walk> single = {{7}};
  CHECK(pair_stream(single, 3).empty());
}

TEST_CASE("pair stream count formula") {
  for (std::size_t n = 1; n < 30; ++n) {
    for (std::size_t k = 1; k < 12; ++k) {
      Walk w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<NodeId>(i);
      std::size_t expected = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t hi = std::min(i + k, n - 1);
        const std::size_t lo = i >= k ? i - k : 0;
        expected += hi - lo;
      }
      std::size_t brute = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j && (i > j ? i - j : j - i) <= k) ++brute;
        }
      }
      const std::vector<Walk> corpus = {w};
      CHECK(pair_stream(corpus, k).size() == expected);
      CHECK(expected == brute);
    }
  }
}

TEST_CASE("zero vectors: loss (1 + negatives) log 2, zero center gradient") {
  Rng rng(1);
  EmbeddingModel m = random_model(6, 4, rng, 0.0);
  const std::vector<std::size_t> negs = {2, 3, 4, 5, 1};
  CHECK(sgns_loss(m, 0, 1, negs) == doctest::Approx(6 * std::log(2.0)).epsilon(1e-12));
  const SgnsGradient g = sgns_gradient(m, 0, 1, negs);
  for (double x : g.center) CHECK(x == 0.0);
  CHECK(sgns_step(m, 0, 1, negs, 0.1) == doctest::Approx(6 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("SGNS gradient matches central differences") {
  Rng rng(2024);
  const double h = 1e-5;
  for (int state = 0; state < 100; ++state) {
    EmbeddingModel m = random_model(7, 8, rng, 0.8);
    const std::size_t center = uniform_index(rng, 7);
    const std::size_t context = uniform_index(rng, 7);
    std::vector<std::size_t> negs;
    for (int k = 0; k < 4; ++k) negs.push_back(uniform_index(rng, 7));
    const SgnsGradient g = sgns_gradient(m, center, context, negs);

    for (std::size_t i = 0; i < 8; ++i) {
      double& x = m.input[center * 8 + i];
      const double saved = x;
      x = saved + h;
      const double up = sgns_loss(m, center, context, negs);
      x = saved - h;
      const double down = sgns_loss(m, center, context, negs);
      x = saved;
      CHECK(rel_err(g.center[i], (up - down) / (2 * h)) < 1e-4);
    }
    std::map<std::size_t, std::vector<double>> per_row;
    for (const auto& [row, grad] : g.outputs) {
      auto& acc = per_row[row];
      acc.resize(8, 0.0);
      for (std::size_t i = 0; i < 8; ++i) acc[i] += grad[i];
    }
    for (const auto& [row, grad] : per_row) {
      for (std::size_t i = 0; i < 8; ++i) {
        double& x = m.output[row * 8 + i];
        const double saved = x;
        x = saved + h;
        const double up = sgns_loss(m, center, context, negs);
        x = saved - h;
        const double down = sgns_loss(m, center, context, negs);
        x = saved;
        CHECK(rel_err(grad[i], (up - down) / (2 * h)) < 1e-4);
      }
    }
  }
}

TEST_CASE("repeated steps on one pair decrease the loss") {
  Rng rng(9);
  EmbeddingModel m = random_model(5, 8, rng, 0.5);
  const std::vector<std::size_t> negs = {2, 3, 4};
  double previous = sgns_loss(m, 0, 1, negs);
  for (int step = 0; step < 200; ++step) {
    sgns_step(m, 0, 1, negs, 0.05);
    const double now = sgns_loss(m, 0, 1, negs);
    CHECK(now <= previous);
    previous = now;
  }
}

TEST_CASE("training shape, finiteness, loss trend and determinism") {
  const Graph g = random_connected_graph(30, 0.15, 5);
  WalkParams wp;
  wp.length = 20;
  wp.walks_per_node = 5;
  const auto corpus = generate_corpus(g, wp, 1);
  const TrainResult a = train(corpus, small_config());
  CHECK(a.model.rows() == 30);
  CHECK(a.model.dim == 16);
  CHECK(a.model.input.size() == 30 * 16);
  for (double x : a.model.input) CHECK(std::isfinite(x));
  REQUIRE(a.epoch_loss.size() == 5);
  CHECK(a.epoch_loss.back() < a.epoch_loss.front());
  for (std::size_t r = 0; r < a.model.rows(); ++r) {
    double n2 = 0.0;
    for (double x : a.model.input_row(r)) n2 += x * x;
    CHECK(std::sqrt(n2) < 1e3);
  }
  const TrainResult b = train(corpus, small_config());
  CHECK(a.model.input == b.model.input);
  CHECK(a.model.nodes == b.model.nodes);
}

TEST_CASE("training validates config and corpus") {
  TrainConfig c = small_config();
  CHECK_THROWS_AS(train({}, c), ValidationError);
  const std::vector<Walk> corpus = {{0, 1, 0}};
  c.dim = 0;
  CHECK_THROWS_AS(train(corpus, c), ValidationError);
  c = small_config();
  c.lr_final = 1.0;
  CHECK_THROWS_AS(train(corpus, c), ValidationError);
  c = small_config();
  c.negatives = 0;
  CHECK_THROWS_AS(train(corpus, c), ValidationError);
}

TEST_CASE("homophily on two joined cliques") {
  const Graph g = two_cliques(15);
  WalkParams wp;
  wp.length = 40;
  wp.walks_per_node = 10;
  const auto corpus = generate_corpus(g, wp, 2);
  TrainConfig c;
  c.dim = 32;
  c.seed = 4;
  const EmbeddingModel m = train(corpus, c).model;
  double intra = 0.0;
  double inter = 0.0;
  int n_intra = 0;
  int n_inter = 0;
  for (NodeId u = 0; u < 30; ++u) {
    for (NodeId v = u + 1; v < 30; ++v) {
      const double s = cosine_similarity(m.vector_of(u), m.vector_of(v));
      if ((u < 15) == (v < 15)) {
        intra += s;
        ++n_intra;
      } else {
        inter += s;
        ++n_inter;
      }
    }
  }
  CHECK(intra / n_intra > inter / n_inter);
}

TEST_CASE("embedding text format") {
  EmbeddingModel m;
  m.dim = 2;
  m.nodes = {0, 1};
  m.vocab = {{0, 0}, {1, 1}};
  m.input = {1, 0, 0, 1};
  std::ostringstream out;
  save_embedding(m, out);
  CHECK(out.str() == "2 2\n0 1 0\n1 0 1\n");

  std::istringstream in(out.str());
  const EmbeddingModel back = load_embedding(in);
  CHECK(back.nodes == m.nodes);
  CHECK(back.input == m.input);
}

TEST_CASE("embedding round trip keeps full precision") {
  const Graph g = random_connected_graph(25, 0.2, 8);
  WalkParams wp;
  wp.length = 10;
  wp.walks_per_node = 2;
  const EmbeddingModel m = train(generate_corpus(g, wp, 3), small_config()).model;
  std::stringstream buf;
  save_embedding(m, buf);
  const EmbeddingModel back = load_embedding(buf);
  REQUIRE(back.nodes == m.nodes);
  double worst = 0.0;
  for (std::size_t i = 0; i < m.input.size(); ++i) worst = std::max(worst, std::abs(m.input[i] - back.input[i]));
  CHECK(worst < 1e-8);
}

TEST_CASE("embedding parse errors name the row") {
  SUBCASE("short row") {
    std::istringstream in("3 4\n0 1 2 3 4\n1 1 2 3\n");
    try {
      load_embedding(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("missing rows") {
    std::istringstream in("3 1\n0 1\n1 2\n");
    CHECK_THROWS_AS(load_embedding(in), ParseError);
  }
  SUBCASE("bad header") {
    std::istringstream in("3\n0 1\n");
    CHECK_THROWS_AS(load_embedding(in), ParseError);
  }
  SUBCASE("non-numeric value") {
    std::istringstream in("1 2\n0 1 abc\n");
    CHECK_THROWS_AS(load_embedding(in), ParseError);
  }
}

TEST_CASE("unembedded node lookups") {
  EmbeddingModel m;
  m.dim = 1;
  CHECK_THROWS_AS(m.row_of(3), LookupError);
}
