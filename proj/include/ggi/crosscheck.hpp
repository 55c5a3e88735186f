#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "ggi/alexander.hpp"
#include "ggi/graph.hpp"
#include "ggi/jump_loci.hpp"
#include "ggi/rng.hpp"

namespace ggi {

// Seeded sampling cross-validation of the jump-loci answers: the component
// lists (the closed-form answer) against the rank oracles computed straight
// from the definitions (cohomology multiplication complex, Fox calculus,
// Alexander support).  Every disagreement is reported with the sampled
// point, never asserted away.

struct CrosscheckFailure {
  std::string category;
  std::string point;  // human-readable sampled point
  std::string detail;
};

struct CrosscheckSection {
  std::string name;
  int checked = 0;
  int agreed = 0;
};

struct CrosscheckResult {
  std::uint64_t seed = 0;
  int points_per_component = 0;
  std::vector<CrosscheckSection> sections;
  std::vector<CrosscheckFailure> failures;

  bool all_agree() const { return failures.empty(); }
  CrosscheckSection& section(const std::string& name) {
    for (auto& s : sections)
      if (s.name == name) return s;
    sections.push_back({name, 0, 0});
    return sections.back();
  }
};

namespace detail {
inline std::string point_text(const std::vector<Rat>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

inline void tally(CrosscheckResult& res, const std::string& section, bool expected, bool got,
                  const std::vector<Rat>& point, const std::string& detail) {
  auto& s = res.section(section);
  s.checked++;
  if (expected == got) {
    s.agreed++;
  } else {
    res.failures.push_back({section, point_text(point),
                            detail + " expected=" + (expected ? "true" : "false") +
                                " got=" + (got ? "true" : "false")});
  }
}
}  // namespace detail

// Cross-validate the ambient group's loci.  Works for any finite graph.
inline void crosscheck_raag(const Graph& g, SeededRng& rng, int k_points, CrosscheckResult& res) {
  const int n = g.n();
  if (n == 0) return;
  ComponentList<SubspaceComponent> rcomps = resonance_components(g, Target::raag);
  ComponentList<TorusComponent> ccomps = characteristic_components(g, Target::raag);
  AlexanderMatrix lin = infinitesimal_presentation(g);
  AlexanderMatrix lau = alexander_presentation(g);

  // points on each resonance component
  for (const auto& comp : rcomps.components) {
    for (int t = 0; t < k_points; ++t) {
      std::vector<Rat> a(static_cast<size_t>(n), Rat(0));
      for (int v : comp.w.vertices()) a[static_cast<size_t>(v)] = rng.small_rational_nonzero();
      detail::tally(res, "raag_resonance_component", true,
                    resonance_membership_oracle(g, Target::raag, a), a, "cup-complex oracle");
      detail::tally(res, "raag_resonance_component_support", true, evaluate_in_support(lin, a), a,
                    "infinitesimal support oracle");
    }
  }
  // generic points
  for (int t = 0; t < k_points; ++t) {
    std::vector<Rat> a(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) a[static_cast<size_t>(v)] = rng.small_rational_nonzero();
    bool ground = point_on_components(rcomps, a);
    detail::tally(res, "raag_resonance_generic", ground,
                  resonance_membership_oracle(g, Target::raag, a), a, "cup-complex oracle");
    detail::tally(res, "raag_resonance_generic_support", ground, evaluate_in_support(lin, a), a,
                  "infinitesimal support oracle");
  }

  // characters on each characteristic component
  for (const auto& comp : ccomps.components) {
    if (comp.w.count() == 0) continue;
    for (int t = 0; t < k_points; ++t) {
      std::vector<Rat> vals(static_cast<size_t>(n), Rat(1));
      for (int v : comp.w.vertices())
        vals[static_cast<size_t>(v)] = rng.small_rational_not_zero_or_one();
      Character rho = Character::for_raag(vals);
      detail::tally(res, "raag_characteristic_component", true,
                    characteristic_membership_oracle(g, Target::raag, rho), vals, "fox oracle");
      detail::tally(res, "raag_characteristic_component_support", true,
                    evaluate_in_support(lau, rho), vals, "alexander support oracle");
    }
  }
  for (int t = 0; t < k_points; ++t) {
    std::vector<Rat> vals(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) vals[static_cast<size_t>(v)] = rng.small_rational_not_zero_or_one();
    Character rho = Character::for_raag(vals);
    bool ground = character_on_components(ccomps, rho);
    detail::tally(res, "raag_characteristic_generic", ground,
                  characteristic_membership_oracle(g, Target::raag, rho), vals, "fox oracle");
    detail::tally(res, "raag_characteristic_generic_support", ground, evaluate_in_support(lau, rho),
                  vals, "alexander support oracle");
  }
}

// Cross-validate the kernel group's loci; requires the simple-connectivity
// gate (or the explicit override) and a connected graph on > 1 vertices.
inline void crosscheck_bb(const Graph& g, SeededRng& rng, int k_points, CrosscheckResult& res,
                          bool override_gate = false) {
  const int n = g.n();
  if (n <= 1) return;
  ComponentList<SubspaceComponent> rcomps = resonance_components(g, Target::bb, override_gate);
  ComponentList<TorusComponent> ccomps = characteristic_components(g, Target::bb, override_gate);

  auto sample_on_subspace = [&](const SubspaceComponent& comp) {
    std::vector<Rat> a(static_cast<size_t>(n) - 1, Rat(0));
    for (int c = 0; c < comp.basis.cols; ++c) {
      Rat coeff = rng.small_rational_nonzero();
      for (int i = 0; i < comp.basis.rows; ++i)
        a[static_cast<size_t>(i)] += coeff * comp.basis.at(i, c);
    }
    return a;
  };

  if (rcomps.full) {
    for (int t = 0; t < k_points; ++t) {
      std::vector<Rat> a(static_cast<size_t>(n) - 1);
      for (auto& x : a) x = rng.small_rational_nonzero();
      detail::tally(res, "bb_resonance_full", true,
                    resonance_membership_oracle(g, Target::bb, a, override_gate), a,
                    "quotient cup-complex oracle");
    }
  } else {
    for (const auto& comp : rcomps.components)
      for (int t = 0; t < k_points; ++t) {
        std::vector<Rat> a = sample_on_subspace(comp);
        detail::tally(res, "bb_resonance_component", true,
                      resonance_membership_oracle(g, Target::bb, a, override_gate), a,
                      "quotient cup-complex oracle");
      }
    for (int t = 0; t < k_points; ++t) {
      std::vector<Rat> a(static_cast<size_t>(n) - 1);
      for (auto& x : a) x = rng.small_rational_nonzero();
      bool ground = point_on_components(rcomps, a);
      detail::tally(res, "bb_resonance_generic", ground,
                    resonance_membership_oracle(g, Target::bb, a, override_gate), a,
                    "quotient cup-complex oracle");
    }
  }

  auto quotient_character = [&](const std::vector<Rat>& lift) {
    std::vector<Rat> q(static_cast<size_t>(n) - 1);
    for (int i = 0; i + 1 < n; ++i)
      q[static_cast<size_t>(i)] = lift[static_cast<size_t>(i)] / lift[static_cast<size_t>(n) - 1];
    return Character::for_bb(q);
  };

  if (ccomps.full) {
    for (int t = 0; t < k_points; ++t) {
      std::vector<Rat> q(static_cast<size_t>(n) - 1);
      bool nontrivial = false;
      for (auto& x : q) {
        x = rng.small_rational_not_zero_or_one();
        nontrivial = true;
      }
      if (!nontrivial) continue;
      detail::tally(res, "bb_characteristic_full", true,
                    characteristic_membership_oracle(g, Target::bb, Character::for_bb(q),
                                                     override_gate),
                    q, "fox oracle on the reduced presentation");
    }
  } else {
    for (const auto& comp : ccomps.components)
      for (int t = 0; t < k_points; ++t) {
        std::vector<Rat> lift(static_cast<size_t>(n), Rat(1));
        for (int v : comp.w.vertices())
          lift[static_cast<size_t>(v)] = rng.small_rational_not_zero_or_one();
        Character rho = quotient_character(lift);
        detail::tally(res, "bb_characteristic_component", true,
                      characteristic_membership_oracle(g, Target::bb, rho, override_gate),
                      rho.vertex_values, "fox oracle on the reduced presentation");
      }
    for (int t = 0; t < k_points; ++t) {
      std::vector<Rat> q(static_cast<size_t>(n) - 1);
      for (auto& x : q) x = rng.small_rational_not_zero_or_one();
      Character rho = Character::for_bb(q);
      bool ground = character_on_components(ccomps, rho);
      detail::tally(res, "bb_characteristic_generic", ground,
                    characteristic_membership_oracle(g, Target::bb, rho, override_gate),
                    rho.vertex_values, "fox oracle on the reduced presentation");
    }
  }
}

inline CrosscheckResult run_crosscheck(const Graph& g, std::uint64_t seed, int k_points,
                                       bool assume_simply_connected = false) {
  CrosscheckResult res;
  res.seed = seed;
  res.points_per_component = k_points;
  SeededRng rng(seed);
  crosscheck_raag(g, rng, k_points, res);
  if (is_connected(g) && g.n() > 1) {
    SimplyConnectedStatus st = simply_connected_status(g);
    if (st.yes() || assume_simply_connected)
      crosscheck_bb(g, rng, k_points, res, assume_simply_connected);
  }
  return res;
}

}  // namespace ggi
