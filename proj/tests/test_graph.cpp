#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "linkpred/error.hpp"
#include "linkpred/graph.hpp"
#include "synthetic.hpp"

using namespace linkpred;
using namespace linkpred::testing;

namespace {

std::set<std::pair<NodeId, NodeId>> as_set(const std::vector<Edge>& edges) {
  std::set<std::pair<NodeId, NodeId>> out;
  for (const Edge& e : edges) out.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  return out;
}

LoadResult load_text(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

}  // namespace

TEST_CASE("load_edge_list collapses repeated and reversed pairs") {
  auto r = load_text("0 1\n1 0\n0 1");
  CHECK(r.graph.num_nodes() == 2);
  CHECK(r.graph.num_edges() == 1);
  CHECK(r.self_loops_dropped == 0);
}

TEST_CASE("load_edge_list drops self-loops and counts them") {
  auto r = load_text("5 5\n0 1");
  CHECK(r.graph.num_nodes() == 2);
  CHECK(r.graph.nodes() == std::vector<NodeId>{0, 1});
  CHECK(r.graph.num_edges() == 1);
  CHECK(r.self_loops_dropped == 1);
}

TEST_CASE("load_edge_list accepts CRLF, tabs and trailing blank lines") {
  auto r = load_text("10 20\r\n20\t30\r\n\r\n\n");
  CHECK(r.graph.num_nodes() == 3);
  CHECK(r.graph.num_edges() == 2);
  CHECK(r.graph.nodes() == std::vector<NodeId>{10, 20, 30});
  CHECK(r.graph.index_of(30) == 2);
}

TEST_CASE("load_edge_list reports the offending line") {
  SUBCASE("non-integer token") {
    try {
      load_text("0 1\n1 x\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("wrong arity") {
    try {
      load_text("0 1\n\n1 2 3\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("header line") { CHECK_THROWS_AS(load_text("% comment\n0 1\n"), ParseError); }
  SUBCASE("negative id") { CHECK_THROWS_AS(load_text("-1 2\n"), ParseError); }
}

TEST_CASE("empty input loads as an empty graph") {
  auto r = load_text("");
  CHECK(r.graph.empty());
  CHECK(r.graph.num_edges() == 0);
}

TEST_CASE("degree") {
  CHECK(triangle().degree(0) == 2);
  CHECK(path3().degree(1) == 2);
  CHECK(path3().degree(0) == 1);
  CHECK(star(5).degree(0) == 5);
  CHECK_THROWS_AS(triangle().degree(7), LookupError);
}

TEST_CASE("shared_neighbors") {
  const Graph g = g1();
  auto s = g.shared_neighbors(1, 2);
  std::sort(s.begin(), s.end());
  CHECK(s == std::vector<NodeId>{0, 3});
  CHECK(g.shared_neighbors(0, 4).empty());
  for (NodeId u : g.nodes()) {
    auto self = g.shared_neighbors(u, u);
    auto nbrs = g.neighbors(u);
    CHECK(self == nbrs);
  }
  CHECK_THROWS_AS(g.shared_neighbors(0, 99), LookupError);
}

TEST_CASE("graph invariants hold on random graphs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_graph(12, 0.35, seed);
    std::size_t degree_sum = 0;
    for (std::size_t i = 0; i < g.num_nodes(); ++i) {
      degree_sum += g.degree_at(i);
      CHECK(g.index_of(g.node_at(i)) == i);
      for (std::size_t j : g.adjacent(i)) {
        CHECK(j != i);
        CHECK(g.has_edge_at(j, i));
      }
    }
    CHECK(degree_sum == 2 * g.num_edges());

    for (NodeId u : g.nodes()) {
      for (NodeId v : g.nodes()) {
        auto uv = g.shared_neighbors(u, v);
        auto vu = g.shared_neighbors(v, u);
        std::sort(uv.begin(), uv.end());
        std::sort(vu.begin(), vu.end());
        CHECK(uv == vu);
        if (u != v) {
          for (NodeId w : uv) CHECK(g.degree(w) >= 2);
        }
      }
    }
  }
}

TEST_CASE("split_edges sizes follow ceil of the fraction") {
  std::vector<Edge> edges;
  for (int i = 0; i < 170; ++i) edges.push_back({i, i + 1});
  const Graph g = Graph::from_edges(edges);
  REQUIRE(g.num_edges() == 170);
  const auto part = split_edges(g, 0.1, 42);
  CHECK(part.test.size() == 17);
  CHECK(part.train.size() == 153);
  CHECK(test_edge_count(171, 0.1) == 18);
  CHECK(test_edge_count(10, 0.25) == 3);
}

TEST_CASE("split_edges is a deterministic partition") {
  std::vector<Edge> edges;
  for (int i = 0; i < 170; ++i) edges.push_back({i, i + 1});
  const Graph big = Graph::from_edges(edges);
  const auto a = split_edges(big, 0.1, 7);
  const auto b = split_edges(big, 0.1, 7);
  CHECK(a.train == b.train);
  CHECK(a.test == b.test);
  const auto c = split_edges(big, 0.1, 8);
  CHECK(as_set(a.test) != as_set(c.test));
  CHECK(big.edges() == edges);  // stored order untouched

  const Graph g = g1();
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto part = split_edges(g, 0.1, seed);
    auto train = as_set(part.train);
    auto test = as_set(part.test);
    for (const auto& e : test) CHECK_FALSE(train.contains(e));
    train.insert(test.begin(), test.end());
    CHECK(train == as_set(g.edges()));
  }
}

TEST_CASE("split_edges validates its arguments") {
  CHECK_THROWS_AS(split_edges(g1(), 0.0, 1), ValidationError);
  CHECK_THROWS_AS(split_edges(g1(), 1.0, 1), ValidationError);
  CHECK_THROWS_AS(split_edges(g1(), -0.5, 1), ValidationError);
  CHECK_THROWS_AS(split_edges(single_edge(), 0.5, 1), ValidationError);
}

TEST_CASE("sample_non_neighbor") {
  Rng rng(3);
  SUBCASE("single candidate") {
    const Graph g = path3();
    for (int i = 0; i < 100; ++i) CHECK(sample_non_neighbor(g, 0, rng) == 2);
  }
  SUBCASE("saturated node is an error") { CHECK_THROWS_AS(sample_non_neighbor(triangle(), 0, rng), ValidationError); }
  SUBCASE("uniform over the leaves of a star") {
    const Graph g = star(5);
    std::map<NodeId, int> counts;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) ++counts[sample_non_neighbor(g, 1, rng)];
    CHECK(counts.size() == 4);
    const double sigma = std::sqrt(0.25 * 0.75 / draws);
    for (NodeId leaf : {2, 3, 4, 5}) {
      CHECK(std::abs(counts[leaf] / double(draws) - 0.25) < 3 * sigma);
    }
  }
  SUBCASE("never returns the node or a neighbor") {
    int drawn = 0;
    for (std::uint64_t seed = 0; drawn < 100000; ++seed) {
      const Graph g = random_graph(10, 0.4, seed);
      for (NodeId u : g.nodes()) {
        if (g.degree(u) + 1 >= g.num_nodes()) continue;
        for (int k = 0; k < 50; ++k, ++drawn) {
          const NodeId w = sample_non_neighbor(g, u, rng);
          CHECK(w != u);
          CHECK_FALSE(g.has_edge(u, w));
        }
      }
    }
  }
}
