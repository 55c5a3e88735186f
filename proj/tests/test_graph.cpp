#include <catch2/catch_amalgamated.hpp>

#include "ggi/graph.hpp"
#include "test_support.hpp"

using namespace ggi;
using namespace ggi::testsupport;

TEST_CASE("graph construction rejects invalid input") {
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph({"a", "a"}, {}), std::invalid_argument);
  // canonical storage: smaller index first, sorted
  Graph g = Graph::from_edges(3, {{2, 0}, {1, 0}});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
}

TEST_CASE("induced subgraphs") {
  Graph g = c4();
  Graph sub = induced_subgraph(g, VertexSet::of(4, {0, 2}));
  CHECK(sub.n() == 2);
  CHECK(sub.m() == 0);
  CHECK(sub.vertex_names() == std::vector<std::string>{"v1", "v3"});

  CHECK(induced_subgraph(g, VertexSet::full(4)) == g);

  Graph k3 = induced_subgraph(k4(), VertexSet::of(4, {0, 1, 2}));
  CHECK(k3.m() == 3);

  VertexSet bad(3);
  CHECK_THROWS_AS(induced_subgraph(g, bad), std::out_of_range);
}

TEST_CASE("connected components and reduced b0") {
  CHECK(connected_components(p3()).size() == 1);
  CHECK(reduced_b0(p3()) == 0);
  CHECK(reduced_b0_within(c4(), VertexSet::of(4, {0, 2})) == 1);
  CHECK(reduced_b0(Graph::from_edges(3, {})) == 2);
  CHECK(reduced_b0(Graph::from_edges(0, {})) == -1);
}

TEST_CASE("connectivity") {
  CHECK(connectivity(p3()) == 1);
  CHECK(connectivity(c4()) == 2);
  CHECK(connectivity(k4()) == 3);  // capped at |V|-1
  CHECK(connectivity(Graph::from_edges(1, {})) == 0);
  CHECK(connectivity(two_triangles()) == 0);  // disconnected, flagged as 0
  CHECK_THROWS_AS(connectivity(Graph::from_edges(0, {})), std::invalid_argument);
}

TEST_CASE("clique counts") {
  CHECK(clique_counts(p3()) == std::vector<Int>{1, 3, 2});
  CHECK(clique_counts(k4()) == std::vector<Int>{1, 4, 6, 4, 1});
  CHECK(clique_counts(c4()) == std::vector<Int>{1, 4, 4});
  CHECK(clique_counts(Graph::from_edges(0, {})) == std::vector<Int>{1});
}

TEST_CASE("non-edges") {
  CHECK(non_edges(p3()) == std::vector<std::pair<int, int>>{{0, 2}});
  CHECK(non_edges(k4()).empty());
  CHECK(non_edges(c4()) == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
}

TEST_CASE("cut coefficients on the named examples") {
  CutCoefficients p = cut_coefficients(p3());
  CHECK(p.c[2] == 1);
  CHECK(p.c[3] == 0);
  CHECK_FALSE(p.truncated);

  CutCoefficients c = cut_coefficients(c4());
  CHECK(c.c[2] == 2);
  CHECK(c.c[3] == 0);
  CHECK(c.c[4] == 0);

  for (int n = 2; n <= 5; ++n) {
    CutCoefficients k = cut_coefficients(complete_graph(n));
    for (const Int& v : k.c) CHECK(v == 0);
  }
}

TEST_CASE("cut coefficient cap produces a flagged partial result") {
  CutCoefficients capped = cut_coefficients(path_graph(6), 3);
  CHECK(capped.truncated);
  CHECK(capped.max_size_computed == 3);
  CutCoefficients full = cut_coefficients(path_graph(6));
  CHECK_FALSE(full.truncated);
  for (int j = 2; j <= 3; ++j) CHECK(capped.c[static_cast<size_t>(j)] == full.c[static_cast<size_t>(j)]);
}

TEST_CASE("maximal disconnected subsets on the named examples") {
  auto ms = maximal_disconnected_subsets(p3());
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].vertices() == std::vector<int>{0, 2});

  auto mc = maximal_disconnected_subsets(c4());
  REQUIRE(mc.size() == 2);
  CHECK(mc[0].vertices() == std::vector<int>{0, 2});
  CHECK(mc[1].vertices() == std::vector<int>{1, 3});

  CHECK(maximal_disconnected_subsets(k4()).empty());
}

TEST_CASE("cut coefficients agree with the independent subset oracle") {
  // exhaustive over all labeled graphs on <= 5 vertices
  for (int n = 0; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (unsigned long mask = 0; mask < (1UL << pairs); ++mask) {
      std::vector<std::pair<int, int>> edges;
      int idx = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++idx)
          if (mask & (1UL << idx)) edges.emplace_back(i, j);
      Graph g = Graph::from_edges(n, edges);
      CHECK(cut_coefficients(g).c == cut_coefficients_oracle(g));
    }
  }
  // isomorphism types on 6, plus trees on 7
  for (const Graph& g : connected_graphs_up_to_iso(6))
    CHECK(cut_coefficients(g).c == cut_coefficients_oracle(g));
  int sampled = 0;
  for (const Graph& g : all_labeled_trees(7)) {
    if (sampled++ % 97 != 0) continue;
    CHECK(cut_coefficients(g).c == cut_coefficients_oracle(g));
  }
}

TEST_CASE("cut coefficients vanish exactly beyond |V| - kappa") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : connected_graphs_up_to_iso(n)) {
      int kappa = connectivity(g);
      CutCoefficients cc = cut_coefficients(g);
      for (int j = 2; j <= n; ++j) {
        bool zero = cc.c[static_cast<size_t>(j)] == 0;
        CHECK(zero == (j > n - kappa));
      }
    }
}

TEST_CASE("maximal disconnected subsets: recomputation over all supersets") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : connected_graphs_up_to_iso(n)) {
      auto maxdisc = maximal_disconnected_subsets(g);
      std::set<std::vector<int>> members;
      for (const VertexSet& w : maxdisc) {
        members.insert(w.vertices());
        CHECK_FALSE(is_connected_within(g, w));
        // every superset (all of them, not just one-vertex extensions) is connected
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
          if (!w.contains(v)) rest.push_back(v);
        for (unsigned long mask = 1; mask < (1UL << rest.size()); ++mask) {
          VertexSet sup = w;
          for (size_t i = 0; i < rest.size(); ++i)
            if (mask & (1UL << i)) sup.add(rest[i]);
          CHECK(is_connected_within(g, sup));
        }
      }
      // completeness: every disconnected subset lies inside some maximal one
      for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        VertexSet w(n);
        for (int v = 0; v < n; ++v)
          if (mask & (1UL << v)) w.add(v);
        if (w.count() < 2 || is_connected_within(g, w)) continue;
        bool covered = false;
        for (const VertexSet& m : maxdisc)
          if (w.is_subset_of(m)) covered = true;
        CHECK(covered);
      }
    }
}

TEST_CASE("clique complement count identity") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graphs_up_to_iso(n)) {
      std::vector<Int> f = clique_counts(g);
      Int f2 = f.size() > 2 ? f[2] : Int(0);
      CHECK(f2 + static_cast<long>(non_edges(g).size()) == binomial(n, 2));
    }
}

TEST_CASE("weighted graphs validate weights") {
  Graph g = p3();
  CHECK_THROWS_AS(WeightedGraph(g, {{{0, 1}, 3}}), std::invalid_argument);            // missing
  CHECK_THROWS_AS(WeightedGraph(g, {{{0, 1}, 1}, {{1, 2}, 2}}), std::invalid_argument);  // < 2
  CHECK_THROWS_AS(WeightedGraph(g, {{{0, 1}, 2}, {{1, 2}, 2}, {{0, 2}, 2}}),
                  std::invalid_argument);  // non-edge
  WeightedGraph ok(g, {{{0, 1}, 3}, {{1, 2}, 2}});
  CHECK(ok.weights.at({0, 1}) == 3);
}
