#include <catch2/catch_amalgamated.hpp>

#include "ggi/presentation.hpp"
#include "ggi/triangulation.hpp"
#include "test_support.hpp"

using namespace ggi;
using namespace ggi::testsupport;

namespace {
std::set<std::pair<std::string, std::string>> named_edges(const Graph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [u, v] : g.edges()) {
    std::string a = g.vertex_name(u), b = g.vertex_name(v);
    out.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
  }
  return out;
}
}  // namespace

TEST_CASE("zero-step build is a triangle") {
  DiskTriangulation d = build_special(SpecialBuildScript{});
  CHECK(d.graph.n() == 3);
  CHECK(d.graph.m() == 3);
  CHECK(d.triangles.size() == 1);
  CHECK(d.boundary.size() == 3);
  CHECK(validate(d).pass);
}

TEST_CASE("one step gives the square with a diagonal") {
  DiskTriangulation d = square_diagonal();
  CHECK(d.graph.n() == 4);
  CHECK(d.graph.m() == 5);
  CHECK(d.triangles.size() == 2);
  CHECK(d.boundary.size() == 4);
  CHECK(validate(d).pass);
}

TEST_CASE("scripted build reproduces the six-vertex disk") {
  SpecialBuildScript s;
  s.start = {"v1", "v2", "v4"};
  s.steps = {{"v2", "v4", "v5"}, {"v2", "v5", "v3"}, {"v4", "v5", "v6"}};
  DiskTriangulation d = build_special(s);
  CHECK(d.graph.n() == 6);
  CHECK(d.graph.m() == 9);
  CHECK(d.triangles.size() == 4);
  CHECK(validate(d).pass);
  CHECK(named_edges(d.graph) == named_edges(disk6()));
  CHECK(simply_connected_status(d.graph).yes());
}

TEST_CASE("steps must name a boundary edge") {
  SpecialBuildScript s;
  s.start = {"v1", "v2", "v3"};
  s.steps = {{"v1", "v3", "v4"}, {"v1", "v3", "v5"}};  // second step: edge now interior
  CHECK_THROWS_WITH(build_special(s), Catch::Matchers::ContainsSubstring("step 1"));
  SpecialBuildScript bad;
  bad.steps = {{"v1", "v9", "v4"}};
  CHECK_THROWS_AS(build_special(bad), std::invalid_argument);
}

TEST_CASE("random builds preserve the count identity step by step") {
  for (std::uint64_t seed : {1ULL, 7ULL, 42ULL}) {
    DiskTriangulation d = build_special_random(seed, 6);
    CHECK(2 * d.graph.n() - d.graph.m() == 3);
    CHECK(d.graph.n() == 9);
    CHECK(d.triangles.size() == 7);  // one new 3-cycle per step
    CHECK(validate(d).pass);
    CHECK(simply_connected_status(d.graph).yes());

    // replaying the logged script reproduces the same labelled graph
    SpecialBuildScript replay;
    replay.start = d.log.start;
    replay.steps = d.log.steps;
    DiskTriangulation r = build_special(replay);
    CHECK(named_edges(r.graph) == named_edges(d.graph));
    CHECK(r.boundary == d.boundary);
  }
}

TEST_CASE("tree reduction of special builds has the forced counts") {
  for (std::uint64_t seed : {3ULL, 11ULL}) {
    for (int steps : {0, 2, 5}) {
      DiskTriangulation d = build_special_random(seed, steps);
      GroupPresentation p =
          spanning_tree_reduction(d.graph, default_spanning_tree(d.graph));
      CHECK(p.n_generators() == d.graph.n() - 1);
      CHECK(p.n_relators() == d.graph.n() - 2);
    }
  }
}

TEST_CASE("extra-special extension") {
  DiskTriangulation e8 = extra8();
  CHECK(e8.graph.n() == 8);
  CHECK(e8.graph.m() == 13);
  CHECK(e8.triangles.size() == 6);
  CHECK(e8.r_original_boundary == 4);
  CHECK(e8.boundary.size() == 8);
  CHECK(validate(e8).pass);
  CHECK(connectivity(e8.graph) > 1);

  DiskTriangulation t6 = extend_extra_special(build_special(SpecialBuildScript{}));
  CHECK(t6.graph.n() == 6);
  CHECK(t6.graph.m() == 9);
  CHECK(t6.r_original_boundary == 3);
  CHECK(validate(t6).pass);

  // every vertex of a special build stays on the boundary, so the six-vertex
  // disk has a boundary circuit of length 6 and its extension 12 vertices
  SpecialBuildScript s;
  s.start = {"v1", "v2", "v4"};
  s.steps = {{"v2", "v4", "v5"}, {"v2", "v5", "v3"}, {"v4", "v5", "v6"}};
  DiskTriangulation big = extend_extra_special(build_special(s));
  CHECK(big.graph.n() == 12);
  CHECK(big.graph.m() == 21);
  CHECK(2 * big.graph.n() - big.graph.m() == 3);
  CHECK(big.r_original_boundary == 6);
  CHECK(validate(big).pass);
}

TEST_CASE("validation flags a fake triangulation") {
  DiskTriangulation fake;
  fake.graph = c4();
  fake.triangles = {{0, 1, 2}, {0, 2, 3}};  // not cliques of C4
  fake.boundary = {0, 1, 2, 3};
  ValidationReport r = validate(fake);
  CHECK_FALSE(r.pass);
  CHECK(r.failures.size() >= 2);  // count identity and flag property both fail
}

TEST_CASE("recognition of special skeletons") {
  for (std::uint64_t seed : {5ULL, 9ULL}) {
    DiskTriangulation d = build_special_random(seed, 5);
    auto rec = recognize_special(d.graph);
    REQUIRE(rec.has_value());
    CHECK(validate(*rec).pass);
    CHECK(named_edges(rec->graph) == named_edges(d.graph));
  }
  CHECK_FALSE(recognize_special(c4()).has_value());
  CHECK_FALSE(recognize_special(k4()).has_value());
  CHECK_FALSE(recognize_special(path_graph(4)).has_value());
}

TEST_CASE("recognition of extra-special skeletons") {
  DiskTriangulation e8 = extra8();
  auto rec = recognize_extra_special(e8.graph);
  REQUIRE(rec.has_value());
  CHECK(rec->r_original_boundary == 4);
  CHECK(rec->extra_special);
  std::set<std::pair<int, int>> expect(e8.original_boundary_edges.begin(),
                                       e8.original_boundary_edges.end());
  std::set<std::pair<int, int>> got(rec->original_boundary_edges.begin(),
                                    rec->original_boundary_edges.end());
  CHECK(expect == got);

  CHECK_FALSE(recognize_extra_special(k4()).has_value());
  CHECK_FALSE(recognize_extra_special(path_graph(5)).has_value());
  CHECK_FALSE(recognize_extra_special(c4()).has_value());

  // the six-vertex disk is itself the extension of a single triangle
  auto rec6 = recognize_extra_special(disk6());
  REQUIRE(rec6.has_value());
  CHECK(rec6->r_original_boundary == 3);
}
