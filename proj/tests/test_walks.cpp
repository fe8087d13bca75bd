#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "linkpred/error.hpp"
#include "linkpred/walks.hpp"
#include "synthetic.hpp"

using namespace linkpred;
using namespace linkpred::testing;

namespace {

/** Normalized second-order weights, classified through the public node-id API. */
std::map<NodeId, double> analytic_distribution(const Graph& g, NodeId prev, NodeId curr, double p, double q) {
  std::map<NodeId, double> w;
  double total = 0.0;
  for (NodeId next : g.neighbors(curr)) {
    double x = 1.0 / q;
    if (next == prev) {
      x = 1.0 / p;
    } else if (g.has_edge(prev, next)) {
      x = 1.0;
    }
    w[next] = x;
    total += x;
  }
  for (auto& [_, x] : w) x /= total;
  return w;
}

}  // namespace

TEST_CASE("Vose arrays for a hand-normalized distribution") {
  const Graph g = g1();
  const AliasTable t = build_alias_table(g, 1.0, 2.0);
  const AliasEntry& e = t.entry(g, 0, 1);
  REQUIRE(e.index_to_node == std::vector<NodeId>{0, 2, 3});
  const auto mass = alias_reconstruct(e.arrays);
  CHECK(mass[0] == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(mass[1] == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(mass[2] == doctest::Approx(0.2).epsilon(1e-12));

  Rng rng(11);
  std::map<NodeId, int> counts;
  const int draws = 1000000;
  for (int i = 0; i < draws; ++i) ++counts[alias_draw(e, rng)];
  CHECK(std::abs(counts[0] / double(draws) - 0.4) < 0.005);
  CHECK(std::abs(counts[2] / double(draws) - 0.4) < 0.005);
  CHECK(std::abs(counts[3] / double(draws) - 0.2) < 0.005);
}

TEST_CASE("equal weights give probability-one columns") {
  const Graph g = triangle();
  const AliasTable t = build_alias_table(g, 1.0, 1.0);
  for (const AliasEntry& e : t.entries()) {
    for (double pr : e.arrays.prob) CHECK(pr == 1.0);
  }
}

TEST_CASE("single-neighbor entries are point masses") {
  const Graph g = single_edge();
  const AliasTable t = build_alias_table(g, 0.3, 5.0);
  const AliasEntry& e = t.entry(g, 0, 1);
  CHECK(e.index_to_node == std::vector<NodeId>{0});
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) CHECK(alias_draw(e, rng) == 0);
  CHECK_THROWS_AS(t.entry(g, 0, 0), LookupError);
}

TEST_CASE("uniform three-way entry passes a chi-square test") {
  const double w[] = {1.0, 1.0, 1.0};
  const AliasArrays a = make_alias(w);
  Rng rng(5);
  const int draws = 100000;
  int counts[3] = {0, 0, 0};
  for (int i = 0; i < draws; ++i) ++counts[alias_draw_index(a, rng)];
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - draws / 3.0) * (c - draws / 3.0) / (draws / 3.0);
  const double p_value = std::exp(-chi2 / 2.0);  // survival function, 2 degrees of freedom
  CHECK(p_value > 0.001);
}

TEST_CASE("reconstruction identity on random graphs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(5 + static_cast<int>(seed % 8), 0.45, seed);
    if (g.empty()) continue;
    for (double p : {0.25, 1.0, 4.0}) {
      for (double q : {0.25, 1.0, 4.0}) {
        const AliasTable t = build_alias_table(g, p, q);
        CHECK(t.size() == 2 * g.num_edges());
        for (const AliasEntry& e : t.entries()) {
          CHECK(e.arrays.prob.size() == g.degree(e.curr));
          CHECK(e.arrays.alias.size() == g.degree(e.curr));
          CHECK(e.index_to_node.size() == g.degree(e.curr));
          const auto expected = analytic_distribution(g, e.prev, e.curr, p, q);
          const auto mass = alias_reconstruct(e.arrays);
          for (std::size_t i = 0; i < mass.size(); ++i) {
            CHECK(std::abs(mass[i] - expected.at(e.index_to_node[i])) < 1e-12);
            CHECK(e.arrays.prob[i] >= 0.0);
            CHECK(e.arrays.prob[i] <= 1.0);
          }
        }
      }
    }
  }
}

TEST_CASE("parallel alias build matches the serial reference") {
  const Graph g = random_graph(60, 0.2, 99);
  const AliasTable a = build_alias_table(g, 0.5, 2.0);
  const AliasTable b = build_alias_table_serial(g, 0.5, 2.0);
  REQUIRE(a.size() == b.size());
  for (std::size_t s = 0; s < a.size(); ++s) {
    CHECK(a.at_slot(s).prev == b.at_slot(s).prev);
    CHECK(a.at_slot(s).curr == b.at_slot(s).curr);
    CHECK(a.at_slot(s).arrays.prob == b.at_slot(s).arrays.prob);
    CHECK(a.at_slot(s).arrays.alias == b.at_slot(s).arrays.alias);
  }
}

TEST_CASE("alias table validation") {
  CHECK_THROWS_AS(build_alias_table(g1(), 0.0, 1.0), ValidationError);
  CHECK_THROWS_AS(build_alias_table(g1(), 1.0, -2.0), ValidationError);
  CHECK_THROWS_AS(build_alias_table(Graph{}, 1.0, 1.0), ValidationError);
}

TEST_CASE("weighted walks") {
  Rng rng(21);
  SUBCASE("single edge alternates") {
    const Graph g = single_edge();
    const AliasTable t = build_alias_table(g, 1.0, 1.0);
    const Walk w = weighted_walk(g, t, 0, 9, rng);
    REQUIRE(w.size() == 10);
    for (std::size_t i = 0; i < w.size(); ++i) CHECK(w[i] == static_cast<NodeId>(i % 2));
  }
  SUBCASE("one step is a uniform neighbor") {
    const Graph g = g1();
    const AliasTable t = build_alias_table(g, 1.0, 1.0);
    std::map<NodeId, int> counts;
    for (int i = 0; i < 30000; ++i) {
      const Walk w = weighted_walk(g, t, 1, 1, rng);
      REQUIRE(w.size() == 2);
      CHECK(w[0] == 1);
      ++counts[w[1]];
    }
    CHECK(counts.size() == 3);
    for (NodeId v : {0, 2, 3}) CHECK(std::abs(counts[v] / 30000.0 - 1.0 / 3.0) < 0.01);
  }
  SUBCASE("uniform transitions out of node 1 with p = q = 1") {
    const Graph g = g1();
    const AliasTable t = build_alias_table(g, 1.0, 1.0);
    std::map<NodeId, int> counts;
    int total = 0;
    for (int i = 0; i < 10000; ++i) {
      const Walk w = weighted_walk(g, t, 0, 80, rng);
      CHECK(w.size() == 81);
      for (std::size_t s = 0; s + 1 < w.size(); ++s) {
        CHECK(g.has_edge(w[s], w[s + 1]));
        if (w[s] == 1) {
          ++counts[w[s + 1]];
          ++total;
        }
      }
    }
    for (NodeId v : {0, 2, 3}) CHECK(std::abs(counts[v] / double(total) - 1.0 / 3.0) < 0.01);
  }
  SUBCASE("every transition has positive weight") {
    const Graph g = random_connected_graph(15, 0.2, 4);
    const AliasTable t = build_alias_table(g, 0.25, 4.0);
    for (NodeId x : g.nodes()) {
      const Walk w = weighted_walk(g, t, x, 40, rng);
      for (std::size_t s = 2; s < w.size(); ++s) {
        const auto dist = analytic_distribution(g, w[s - 2], w[s - 1], 0.25, 4.0);
        REQUIRE(dist.contains(w[s]));
        CHECK(dist.at(w[s]) > 0.0);
      }
    }
  }
  SUBCASE("unknown start") {
    const Graph g = g1();
    const AliasTable t = build_alias_table(g, 1.0, 1.0);
    CHECK_THROWS_AS(weighted_walk(g, t, 42, 5, rng), LookupError);
  }
}

TEST_CASE("restart walks") {
  Rng rng(8);
  SUBCASE("c = 0 never leaves the start") {
    const Walk w = restart_walk(g1(), 3, 5, 0.0, rng);
    CHECK(w == Walk{3, 3, 3, 3, 3, 3});
  }
  SUBCASE("c = 1 is a plain random walk") {
    const Walk w = restart_walk(single_edge(), 1, 6, 1.0, rng);
    CHECK(w == Walk{1, 0, 1, 0, 1, 0, 1});
  }
  SUBCASE("star: restart frequency and stationary share of the center") {
    const Graph g = star(4);
    const Walk w = restart_walk(g, 0, 100000, 0.5, rng);
    int from_center = 0;
    int stayed = 0;
    int on_center = 0;
    for (std::size_t s = 1; s < w.size(); ++s) {
      if (w[s] == 0) ++on_center;
      if (w[s - 1] == 0) {
        ++from_center;
        if (w[s] == 0) ++stayed;  // only a restart keeps the walk at the center
      }
    }
    CHECK(std::abs(stayed / double(from_center) - 0.5) < 0.01);
    // Two-state chain: center -> center w.p. 1 - c, leaf -> center w.p. 1.
    CHECK(std::abs(on_center / 100000.0 - 2.0 / 3.0) < 0.01);
  }
  SUBCASE("composition") {
    const Graph g = random_connected_graph(20, 0.15, 2);
    for (NodeId x : g.nodes()) {
      const Walk w = restart_walk(g, x, 50, 0.7, rng);
      CHECK(w.front() == x);
      for (std::size_t s = 1; s < w.size(); ++s) CHECK((w[s] == x || g.has_edge(w[s - 1], w[s])));
    }
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(restart_walk(g1(), 0, 5, 1.5, rng), ValidationError);
    CHECK_THROWS_AS(restart_walk(g1(), 9, 5, 0.5, rng), LookupError);
  }
}

TEST_CASE("corpus generation") {
  const Graph g = random_connected_graph(30, 0.1, 6);
  WalkParams params;
  params.walks_per_node = 10;
  params.length = 12;

  const auto corpus = generate_corpus(g, params, 77);
  REQUIRE(corpus.size() == 300);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(corpus[i].size() == 13);
    CHECK(corpus[i][0] == g.node_at(i % 30));
  }
  CHECK(generate_corpus(g, params, 77) == corpus);
  CHECK(generate_corpus(g, params, 78) != corpus);

  params.mode = WalkMode::Restart;
  params.c = 0.0;
  for (const Walk& w : generate_corpus(g, params, 1)) {
    CHECK(std::all_of(w.begin(), w.end(), [&](NodeId u) { return u == w[0]; }));
  }

  params.length = 0;
  CHECK_THROWS_AS(generate_corpus(g, params, 1), ValidationError);
  params.length = 5;
  params.walks_per_node = 0;
  CHECK_THROWS_AS(generate_corpus(g, params, 1), ValidationError);
}
