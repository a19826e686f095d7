#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "burling/construction.hpp"
#include "burling/error.hpp"
#include "burling/graph.hpp"
#include "burling/relations.hpp"
#include "oracles.hpp"

using namespace burling;

namespace {

Graph make(size_t n, const std::vector<std::pair<size_t, size_t>>& edges) {
  std::vector<std::string> labels;
  for (size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  Graph g(labels);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph cycle(size_t n) {
  std::vector<std::pair<size_t, size_t>> e;
  for (size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return make(n, e);
}

Graph complete(size_t n) {
  std::vector<std::pair<size_t, size_t>> e;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) e.push_back({i, j});
  return make(n, e);
}

oracle::Matrix matrix(const Graph& g) {
  oracle::Matrix m(g.size(), std::vector<bool>(g.size(), false));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

bool proper(const Graph& g, const std::vector<int>& col, int k) {
  if (col.size() != g.size()) return false;
  for (int c : col)
    if (c < 0 || c >= k) return false;
  for (auto [u, v] : g.edges())
    if (col[u] == col[v]) return false;
  return true;
}

Graph family_graph(const char* shape, int k) {
  return oriented_intersection_graph(burling_sequence(named_shape(shape), k).family).underlying();
}

}  // namespace

TEST(Graph, Basics) {
  Graph g = make(3, {{0, 1}, {1, 0}});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_EQ(g.degree(2), 0u);
  EXPECT_EQ(g.index_of("v2"), 2u);
  EXPECT_THROW(g.add_edge(1, 1), Error);
  EXPECT_THROW(g.add_edge(0, 3), Error);
  EXPECT_THROW(g.index_of("nope"), Error);
}

TEST(Cliques, Examples) {
  EXPECT_TRUE(triangle_free(cycle(5)));
  EXPECT_EQ(clique_number(cycle(5)), 2);
  EXPECT_EQ(clique_number(complete(4)), 4);
  EXPECT_FALSE(triangle_free(complete(4)));
  EXPECT_EQ(clique_number(Graph{}), 0);
  EXPECT_EQ(clique_number(make(3, {})), 1);
}

TEST(Chromatic, Examples) {
  const auto one = chromatic_number(make(1, {}));
  EXPECT_TRUE(one.exact);
  EXPECT_EQ(one.upper, 1);
  const auto c5 = chromatic_number(cycle(5));
  EXPECT_TRUE(c5.exact);
  EXPECT_EQ(c5.lower, 3);
  EXPECT_EQ(c5.upper, 3);
  EXPECT_TRUE(proper(cycle(5), c5.coloring, 3));
  EXPECT_EQ(chromatic_number(complete(6)).upper, 6);
  EXPECT_EQ(chromatic_number(Graph{}).upper, 0);
}

TEST(Chromatic, AgreesWithBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 200; ++round) {
    const size_t n = 1 + rng() % 9;
    std::vector<std::pair<size_t, size_t>> e;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (rng() % 100 < 40) e.push_back({i, j});
    const Graph g = make(n, e);
    const auto r = chromatic_number(g);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.upper, oracle::brute_chromatic(matrix(g)));
    EXPECT_TRUE(proper(g, r.coloring, r.upper));
    EXPECT_EQ(triangle_free(g), !oracle::has_triangle(matrix(g)));
    EXPECT_EQ(triangle_free(g), clique_number(g) <= 2);
  }
}

TEST(Chromatic, BudgetGivesBracket) {
  const auto r = chromatic_number(family_graph("frame", 4), 1);
  EXPECT_FALSE(r.exact);
  EXPECT_LE(r.lower, r.upper);
  EXPECT_GE(r.lower, 2);
}

TEST(FamilyGraphs, TriangleFreeWithGrowingChi) {
  for (int k = 1; k <= 3; ++k) {
    const Graph g = family_graph("frame", k);
    EXPECT_TRUE(triangle_free(g));
    EXPECT_FALSE(oracle::has_triangle(matrix(g)));
    const auto r = chromatic_number(g);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.upper, oracle::brute_chromatic(matrix(g)));
    EXPECT_EQ(r.upper, k);
  }
}

TEST(InducedSubgraph, Examples) {
  const Graph g = family_graph("gamma", 3);
  std::vector<size_t> all(g.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  EXPECT_EQ(induced_subgraph(g, all), g);
  EXPECT_EQ(induced_subgraph(g, std::vector<size_t>{}).size(), 0u);

  std::mt19937_64 rng(3);
  for (int round = 0; round < 20; ++round) {
    std::vector<size_t> pick = all;
    std::shuffle(pick.begin(), pick.end(), rng);
    pick.resize(5);
    const Graph h = induced_subgraph(g, pick);
    for (size_t a = 0; a < 5; ++a) {
      EXPECT_EQ(h.label(a), g.label(pick[a]));
      for (size_t b = 0; b < 5; ++b)
        if (a != b) EXPECT_EQ(h.adjacent(a, b), g.adjacent(pick[a], pick[b]));
    }
    std::vector<std::string> labels;
    for (size_t v : pick) labels.push_back(g.label(v));
    EXPECT_EQ(induced_subgraph(g, labels), h);
  }
}

TEST(InducedSubgraph, Errors) {
  const Graph g = cycle(4);
  try {
    induced_subgraph(g, std::vector<size_t>{0, 9});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "bad-vertex");
  }
  EXPECT_THROW(induced_subgraph(g, std::vector<size_t>{1, 1}), Error);
  EXPECT_THROW(induced_subgraph(g, std::vector<std::string>{"zz"}), Error);
}

TEST(OGraph, Validate) {
  OGraph g{{"a", "b"}, {{0, 1}}};
  EXPECT_NO_THROW(g.validate());
  EXPECT_EQ(g.underlying().edge_count(), 1u);
  g.arcs.push_back({1, 1});
  EXPECT_THROW(g.validate(), Error);
  OGraph dup{{"a", "a"}, {}};
  EXPECT_THROW(dup.validate(), Error);
}
