#include <catch2/catch_amalgamated.hpp>

#include "ggi/alexander.hpp"
#include "ggi/jump_loci.hpp"
#include "test_support.hpp"

using namespace ggi;
using namespace ggi::testsupport;

TEST_CASE("triple signs") {
  auto ts = triple_signs(1, 2, 3);
  CHECK(ts[0].pair == std::make_pair(2, 3));
  CHECK(ts[0].opposite_vertex == 1);
  CHECK(ts[0].sign == 1);
  CHECK(ts[1].pair == std::make_pair(1, 3));
  CHECK(ts[1].opposite_vertex == 2);
  CHECK(ts[1].sign == -1);
  CHECK(ts[2].pair == std::make_pair(1, 2));
  CHECK(ts[2].opposite_vertex == 3);
  CHECK(ts[2].sign == 1);
  CHECK_THROWS_AS(triple_signs(2, 1, 3), std::invalid_argument);
}

TEST_CASE("module presentation on the named examples") {
  AlexanderMatrix p = alexander_presentation(p3());
  REQUIRE(p.n_rows() == 1);
  REQUIRE(p.n_cols() == 1);
  REQUIRE(p.entries[0].size() == 1);
  CHECK(p.entries[0][0].vertex == 1);  // -(v2 - 1)
  CHECK(p.entries[0][0].sign == -1);

  AlexanderMatrix k = alexander_presentation(k4());
  CHECK(k.n_rows() == 0);
  CHECK(k.n_cols() == 0);

  AlexanderMatrix c = alexander_presentation(c4());
  CHECK(c.n_rows() == 4);
  CHECK(c.n_cols() == 2);
  for (const auto& row : c.entries) CHECK(row.size() == 1);

  AlexanderMatrix lin = infinitesimal_presentation(p3());
  CHECK_FALSE(lin.laurent);
  REQUIRE(lin.entries[0].size() == 1);
  CHECK(lin.entries[0][0].vertex == 1);
  CHECK(lin.entries[0][0].sign == -1);
}

TEST_CASE("row and column counts") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graphs_up_to_iso(n)) {
      AlexanderMatrix m = alexander_presentation(g);
      CHECK(m.n_cols() == static_cast<int>(non_edges(g).size()));
      std::vector<Int> f = clique_counts(g);
      Int f3 = f.size() > 3 ? f[3] : Int(0);
      CHECK(Int(m.n_rows()) == binomial(n, 3) - f3);
      // a row never has more than 3 entries, each of the form +-(v - 1)
      for (const auto& row : m.entries) CHECK(row.size() <= 3);
    }
}

TEST_CASE("support evaluation on the named examples") {
  AlexanderMatrix lau = alexander_presentation(p3());
  CHECK(evaluate_in_support(lau, {Rat(2), Rat(1), Rat(3)}));        // rho_2 = 1: in T_{1,3}
  CHECK_FALSE(evaluate_in_support(lau, {Rat(2), Rat(2), Rat(3)}));  // rho_2 != 1

  AlexanderMatrix lin = infinitesimal_presentation(p3());
  CHECK(evaluate_in_support(lin, {Rat(1), Rat(0), Rat(5)}));        // a_2 = 0: in H_{1,3}
  CHECK_FALSE(evaluate_in_support(lin, {Rat(1), Rat(2), Rat(5)}));

  CHECK_THROWS_AS(evaluate_in_support(lau, {Rat(0), Rat(1), Rat(1)}), std::invalid_argument);
  CHECK_NOTHROW(evaluate_in_support(lin, {Rat(0), Rat(1), Rat(1)}));
}

TEST_CASE("text export") {
  std::string text = export_sparse_text(alexander_presentation(p3()), p3());
  CHECK(text.find("0 0 -(v2-1)") != std::string::npos);
  std::string lin = export_sparse_text(infinitesimal_presentation(p3()), p3());
  CHECK(lin.find("0 0 -v2") != std::string::npos);
}

TEST_CASE("change of rings diagnostic: lifted verdicts match the kernel oracle") {
  // Characters of the kernel correspond to diagonal classes of ambient
  // characters; the kernel verdict matches the disjunction over lifts that
  // normalize some coordinate class to 1.  Diagnostic only: the kernel's
  // authoritative oracle is Fox calculus on its own presentation.
  Graph g = disk6();
  AlexanderMatrix lau = alexander_presentation(g);
  ComponentList<TorusComponent> comps = characteristic_components(g, Target::bb, true);
  REQUIRE_FALSE(comps.full);
  SeededRng rng(7);
  for (const auto& comp : comps.components) {
    for (int t = 0; t < 5; ++t) {
      std::vector<Rat> lift(static_cast<size_t>(g.n()), Rat(1));
      for (int v : comp.w.vertices()) lift[static_cast<size_t>(v)] = rng.small_rational_not_zero_or_one();
      // the lift with off-W coordinates equal to 1 lies in T_W
      CHECK(evaluate_in_support(lau, lift));
      std::vector<Rat> q(static_cast<size_t>(g.n()) - 1);
      for (int i = 0; i + 1 < g.n(); ++i) q[static_cast<size_t>(i)] = lift[static_cast<size_t>(i)] / lift.back();
      Character rho = Character::for_bb(q);
      CHECK(characteristic_membership_oracle(g, Target::bb, rho, true));
    }
  }
}
