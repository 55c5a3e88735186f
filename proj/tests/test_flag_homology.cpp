#include <catch2/catch_amalgamated.hpp>

#include "ggi/flag_complex.hpp"
#include "test_support.hpp"

using namespace ggi;
using namespace ggi::testsupport;

TEST_CASE("flag complex simplices are the cliques") {
  FlagComplex k3 = flag_complex(complete_graph(3));
  CHECK(k3.count(0) == 3);
  CHECK(k3.count(1) == 3);
  CHECK(k3.count(2) == 1);

  FlagComplex c = flag_complex(c4());
  CHECK(c.dimension() == 1);
  CHECK(c.count(0) == 4);
  CHECK(c.count(1) == 4);

  FlagComplex f = flag_complex(disk6());
  CHECK(f.count(2) == 4);
  CHECK(f.dimension() == 2);
}

TEST_CASE("boundary matrices square to zero, all fields") {
  for (const Graph& g : {k4(), disk6(), octahedron(), extra8().graph}) {
    for (FieldTag field : {FieldTag::rationals(), FieldTag::prime(2), FieldTag::prime(5)}) {
      ChainComplex c = chain_complex(flag_complex(g), field);  // constructor asserts d o d = 0
      for (int d = 1; d <= c.top_dim(); ++d)
        CHECK(imul(c.boundary[static_cast<size_t>(d) - 1], c.boundary[static_cast<size_t>(d)])
                  .is_zero());
    }
  }
}

TEST_CASE("homology of the named examples") {
  HomologySummary circle = homology_ranks(flag_complex(c4()));
  CHECK(circle.betti(0) == 0);
  CHECK(circle.betti(1) == 1);

  HomologySummary cone = homology_ranks(flag_complex(k4()));
  for (int j = 0; j <= 3; ++j) CHECK(cone.betti(j) == 0);

  // octahedral sphere: rank (2-1)^3 = 1 in degree 2
  HomologySummary sphere = homology_ranks(flag_complex(octahedron()));
  CHECK(sphere.betti(0) == 0);
  CHECK(sphere.betti(1) == 0);
  CHECK(sphere.betti(2) == 1);

  HomologySummary mod2 = homology_ranks(flag_complex(octahedron()), FieldTag::prime(2));
  CHECK(mod2.betti(2) == 1);

  CHECK_THROWS_AS(FieldTag::prime(6), std::invalid_argument);
}

TEST_CASE("euler characteristic consistency") {
  auto check = [](const Graph& g) {
    std::vector<Int> f = clique_counts(g);
    Int lhs = 0;
    int sign = 1;
    for (size_t k = 1; k < f.size(); ++k) {
      lhs += sign * f[k];
      sign = -sign;
    }
    HomologySummary h = homology_ranks(flag_complex(g));
    Int rhs = 1;
    sign = 1;
    for (size_t j = 0; j < h.reduced_betti.size(); ++j) {
      rhs += sign * h.reduced_betti[j];
      sign = -sign;
    }
    CHECK(lhs == rhs);
  };
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graphs_up_to_iso(n)) check(g);
  check(two_triangles());
}

TEST_CASE("kernel homology modules") {
  BBHomologyModule p = bb_homology_module(p3(), FieldTag::rationals(), 1);
  CHECK(p.free_rank == 0);
  CHECK(p.trivial_rank == 2);

  BBHomologyModule c = bb_homology_module(c4(), FieldTag::rationals(), 2);
  CHECK(c.free_rank == 1);  // H_2 not finitely generated
  CHECK(c.trivial_rank == 0);

  DiskTriangulation ex = extra8();
  BBHomologyModule e = bb_homology_module(ex.graph, FieldTag::rationals(), 2);
  CHECK(e.free_rank == 0);
  CHECK(e.trivial_rank == 6);
  CHECK(e.trivial_rank == ex.graph.m() - ex.graph.n() + 1);

  CHECK_THROWS_AS(bb_homology_module(two_triangles(), FieldTag::rationals(), 1), gate_refused);
  CHECK_THROWS_AS(bb_homology_module(p3(), FieldTag::rationals(), 0), std::invalid_argument);
}

TEST_CASE("first homology in degree one has trivial free part iff connected") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : connected_graphs_up_to_iso(n)) {
      BBHomologyModule m = bb_homology_module(g, FieldTag::rationals(), 1);
      CHECK(m.free_rank == 0);
      CHECK(m.trivial_rank == n - 1);
    }
}

TEST_CASE("b2 of the kernel equals |E| - |V| + 1 under the gate") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : connected_graphs_up_to_iso(n)) {
      if (!simply_connected_status(g).yes()) continue;
      BBHomologyModule m = bb_homology_module(g, FieldTag::rationals(), 2);
      CHECK(m.free_rank == 0);
      CHECK(m.trivial_rank == g.m() - g.n() + 1);
    }
}

TEST_CASE("free rank agrees with an independently pivoted elimination") {
  for (const Graph& g : {c4(), disk6(), octahedron(), cycle_graph(5)}) {
    ChainComplex c = chain_complex(flag_complex(g));
    for (int j = 0; j <= c.top_dim(); ++j) {
      QMatrix dj = to_rational(c.boundary[static_cast<size_t>(j)]);
      CHECK(rank(dj) == rank_pivot_alt(dj));
    }
  }
}

TEST_CASE("integral H1") {
  IntegralH1 circle = integral_h1(flag_complex(c4()));
  CHECK(circle.rank == 1);
  CHECK(circle.torsion.empty());

  IntegralH1 cone = integral_h1(flag_complex(k4()));
  CHECK(cone.trivial());

  // disconnected but with trivial H1
  IntegralH1 tt = integral_h1(flag_complex(two_triangles()));
  CHECK(tt.trivial());
  CHECK(homology_ranks(flag_complex(two_triangles())).betti(0) == 1);
}

TEST_CASE("smith normal form produces the divisibility chain") {
  IMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(1, 1) = 3;
  std::vector<Int> f = smith_normal_form(m);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == 1);
  CHECK(f[1] == 6);

  IMatrix z(3, 2);
  CHECK(smith_normal_form(z).empty());

  IMatrix k(2, 3);
  k.at(0, 0) = 4;
  k.at(0, 1) = 6;
  k.at(1, 1) = 10;
  k.at(1, 2) = 2;
  std::vector<Int> g = smith_normal_form(k);
  REQUIRE(g.size() == 2);
  CHECK(g[0] == 2);
  CHECK(g[1] % g[0] == 0);
}

TEST_CASE("simple connectivity gate") {
  CHECK(simply_connected_status(k4()).yes());          // cone
  CHECK(simply_connected_status(p3()).yes());          // cone
  CHECK(simply_connected_status(c4()).no());           // circle
  CHECK(simply_connected_status(disk6()).yes());       // collapsible disk
  CHECK(simply_connected_status(two_triangles()).no());  // disconnected

  // the octahedral sphere is simply connected but has no free face and is
  // not a cone: the honest answer without an override is "unknown"
  SimplyConnectedStatus oct = simply_connected_status(octahedron());
  CHECK(oct.value == SimplyConnectedStatus::Value::unknown);

  // validated-disk route
  CHECK(simply_connected_status(flag_complex(extra8().graph), true).yes());
}
