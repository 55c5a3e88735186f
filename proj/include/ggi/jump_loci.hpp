#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ggi/alexander.hpp"
#include "ggi/flag_complex.hpp"
#include "ggi/graph.hpp"
#include "ggi/linalg.hpp"
#include "ggi/presentation.hpp"
#include "ggi/triangulation.hpp"

namespace ggi {

// Which group's jump loci: the right-angled Artin group itself (ambient
// dimension |V|) or its length-homomorphism kernel (ambient |V|-1).
enum class Target { raag, bb };

// Degree-one cohomology of the kernel is modelled as C^V modulo the diagonal,
// with coordinates "subtract the last coordinate".  The pushforward of the
// coordinate subspace on W has one basis column per w in W and rank |W| for
// proper W.
inline QMatrix iota_pushforward_basis(const VertexSet& w, int n_vertices) {
  if (w.count() >= n_vertices)
    throw std::invalid_argument("iota_pushforward_basis: subset must be proper");
  QMatrix basis(n_vertices - 1, w.count());
  int col = 0;
  for (int v : w.vertices()) {
    if (v < n_vertices - 1)
      basis.at(v, col) = 1;
    else
      for (int i = 0; i < n_vertices - 1; ++i) basis.at(i, col) = -1;
    ++col;
  }
  return basis;
}

// A linear component of a resonance variety: the coordinate subspace on W
// (ambient |V|) or its pushforward (ambient |V|-1), with an explicit exact
// rational basis.
struct SubspaceComponent {
  VertexSet w;
  Target ambient = Target::raag;
  QMatrix basis;  // ambient_dim x |W| (or identity-like for W = V)

  int ambient_dim() const {
    return ambient == Target::raag ? w.universe_size() : w.universe_size() - 1;
  }
  int dim() const { return basis.cols; }
};

// A torus component, stored by parameterization: coordinates free on W and 1
// elsewhere; for the kernel target, composed with the quotient by the
// diagonal.
struct TorusComponent {
  VertexSet w;
  Target ambient = Target::raag;
};

template <class Component>
struct ComponentList {
  bool full = false;  // the whole space / torus (kappa = 1 kernel case)
  std::vector<Component> components;
};

namespace detail {
inline void require_bb_gate(const Graph& g, bool override_gate, const char* who) {
  if (!is_connected(g))
    throw gate_refused(std::string(who) + ": kernel target requires a connected graph");
  if (override_gate) return;
  SimplyConnectedStatus st = simply_connected_status(g);
  if (!st.yes())
    throw gate_refused(std::string(who) +
                       ": requires a simply-connected flag complex (status: " + st.text() + ", " +
                       st.reason + "); pass the explicit override to proceed");
}

inline QMatrix coordinate_basis(const VertexSet& w, int n) {
  QMatrix basis(n, w.count());
  int col = 0;
  for (int v : w.vertices()) basis.at(v, col++) = 1;
  return basis;
}
}  // namespace detail

// Irreducible components of the first resonance variety: one coordinate
// subspace H_W per maximal disconnected W for the ambient group; for the
// kernel, the pushforwards H'_W when kappa > 1, the full space when
// kappa = 1.
inline ComponentList<SubspaceComponent> resonance_components(const Graph& g, Target target,
                                                             bool override_gate = false) {
  ComponentList<SubspaceComponent> out;
  if (target == Target::bb) {
    detail::require_bb_gate(g, override_gate, "resonance_components");
    if (g.n() == 1) return out;  // both loci are empty for the trivial kernel
    if (connectivity(g) == 1) {
      out.full = true;
      return out;
    }
    for (const VertexSet& w : maximal_disconnected_subsets(g))
      out.components.push_back({w, Target::bb, iota_pushforward_basis(w, g.n())});
    return out;
  }
  for (const VertexSet& w : maximal_disconnected_subsets(g))
    out.components.push_back({w, Target::raag, detail::coordinate_basis(w, g.n())});
  return out;
}

inline ComponentList<TorusComponent> characteristic_components(const Graph& g, Target target,
                                                               bool override_gate = false) {
  ComponentList<TorusComponent> out;
  if (target == Target::bb) {
    detail::require_bb_gate(g, override_gate, "characteristic_components");
    if (g.n() == 1) return out;
    if (connectivity(g) == 1) {
      out.full = true;
      return out;
    }
    for (const VertexSet& w : maximal_disconnected_subsets(g))
      out.components.push_back({w, Target::bb});
    return out;
  }
  for (const VertexSet& w : maximal_disconnected_subsets(g))
    out.components.push_back({w, Target::raag});
  return out;
}

// Dimension of the intersection of subspace components sharing an ambient:
// stack the dual constraints (left kernels of the bases) and take the
// nullity.
inline int subspace_intersection_dim(const std::vector<SubspaceComponent>& comps) {
  if (comps.empty()) throw std::invalid_argument("subspace_intersection_dim: no components");
  const int dim = comps[0].ambient_dim();
  for (const auto& c : comps) {
    if (c.ambient != comps[0].ambient || c.ambient_dim() != dim)
      throw std::invalid_argument("subspace_intersection_dim: ambient mismatch");
  }
  QMatrix constraints(0, dim);
  for (const auto& c : comps) {
    // rows of the dual: nullspace of basis^T
    QMatrix dual = nullspace(transpose(c.basis));  // dim x k columns
    constraints = vstack(constraints, transpose(dual));
  }
  if (constraints.rows == 0) return dim;
  return dim - rank(constraints);
}

// Does a point lie on some component?  (Exact linear algebra; the ground
// truth the rank oracles are validated against.)
inline bool point_on_components(const ComponentList<SubspaceComponent>& list,
                                const std::vector<Rat>& a) {
  if (list.full) return true;
  QMatrix v(static_cast<int>(a.size()), 1);
  for (size_t i = 0; i < a.size(); ++i) v.at(static_cast<int>(i), 0) = a[i];
  for (const auto& c : list.components)
    if (in_column_span(c.basis, v)) return true;
  return false;
}

// Character membership in a torus component: for the ambient group the
// coordinates off W must equal 1; for the kernel, some lift must land in
// T_W, i.e. the lift with last coordinate 1 must be constant off W.
inline bool character_on_component(const TorusComponent& c, const Character& rho) {
  if (c.ambient == Target::raag) {
    for (int v = 0; v < rho.n_vertices(); ++v)
      if (!c.w.contains(v) && rho.on_vertex(v) != 1) return false;
    return true;
  }
  std::optional<Rat> common;
  for (int v = 0; v < rho.n_vertices(); ++v) {
    if (c.w.contains(v)) continue;
    if (!common)
      common = rho.on_vertex(v);
    else if (*common != rho.on_vertex(v))
      return false;
  }
  return true;
}

inline bool character_on_components(const ComponentList<TorusComponent>& list,
                                    const Character& rho) {
  if (list.full) return true;
  for (const auto& c : list.components)
    if (character_on_component(c, rho)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Membership oracles straight from the definitions.

namespace detail {
// Matrix of right-multiplication by a in degree one of the exterior
// Stanley-Reisner algebra: one row per edge {u, w}, sending x to
// a_u x_w - a_w x_u.
inline QMatrix cup_multiplication_matrix(const Graph& g, const std::vector<Rat>& a) {
  QMatrix m(g.m(), g.n());
  for (int ei = 0; ei < g.m(); ++ei) {
    auto [u, w] = g.edges()[static_cast<size_t>(ei)];
    m.at(ei, w) = a[static_cast<size_t>(u)];
    m.at(ei, u) -= a[static_cast<size_t>(w)];
  }
  return m;
}
}  // namespace detail

// Resonance membership from the cohomology ring: the point is resonant iff
// the degree-one cochain complex (A, a) has nonzero H^1.  For the ambient
// group that is nullity > 1 at a != 0 (and any a when b_1 > 0 at a = 0); for
// the kernel the same computation runs in the quotient ring (degree one:
// C^V modulo the diagonal, degree two: C^E modulo nu . C^V) using a lift.
inline bool resonance_membership_oracle(const Graph& g, Target target, const std::vector<Rat>& a,
                                        bool override_gate = false) {
  if (target == Target::raag) {
    if (static_cast<int>(a.size()) != g.n())
      throw std::invalid_argument("resonance_membership_oracle: wrong vector length");
    bool zero = std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
    if (zero) return g.n() > 0;  // 0 lies in R_1 whenever b_1 > 0
    QMatrix m = detail::cup_multiplication_matrix(g, a);
    int nullity = g.n() - rank(m);
    return nullity > 1;
  }
  detail::require_bb_gate(g, override_gate, "resonance_membership_oracle");
  if (static_cast<int>(a.size()) != g.n() - 1)
    throw std::invalid_argument("resonance_membership_oracle: wrong vector length for kernel target");
  bool zero = std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
  if (zero) return g.n() > 1;
  std::vector<Rat> lift(a);
  lift.push_back(Rat(0));
  QMatrix m_a = detail::cup_multiplication_matrix(g, lift);
  std::vector<Rat> ones(static_cast<size_t>(g.n()), Rat(1));
  QMatrix m_nu = detail::cup_multiplication_matrix(g, ones);
  // rank of the induced map into C^E / (nu . C^V)
  int rank_nu = rank(m_nu);
  int rank_joint = rank(hstack(m_nu, m_a));
  int quotient_rank = rank_joint - rank_nu;
  // kernel of the induced map on C^V contains the diagonal; pass to C^V/<1>
  int nullity = (g.n() - quotient_rank) - 1;
  return nullity > 1;
}

// Characteristic membership from the definition H^1(group, rho) != 0, via Fox
// calculus on the group presentation (the ambient group's own presentation,
// or the spanning-tree-reduced presentation of the kernel).
inline bool characteristic_membership_oracle(const Graph& g, Target target, const Character& rho,
                                             bool override_gate = false) {
  if (target == Target::raag) {
    GroupPresentation p = raag_presentation(g);
    return fox_h1_dimension(p, rho) > 0;
  }
  detail::require_bb_gate(g, override_gate, "characteristic_membership_oracle");
  // gate already enforced above, so the reduction itself need not re-check
  GroupPresentation p = spanning_tree_reduction(g, default_spanning_tree(g), true);
  return fox_h1_dimension(p, rho) > 0;
}

// ---------------------------------------------------------------------------
// Odd contraction of a weighted graph: vertices are the connected components
// of the odd-weight subgraph, joined when any original edge crosses.

inline Graph odd_contraction(const WeightedGraph& wg) {
  const Graph& g = wg.graph;
  std::vector<std::pair<int, int>> odd_edges;
  for (auto [e, m] : wg.weights)
    if (m % 2 != 0) odd_edges.push_back(e);

  // components of the odd subgraph
  std::vector<int> comp(static_cast<size_t>(g.n()), -1);
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.n()));
  for (auto [u, v] : odd_edges) {
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }
  int n_comp = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[static_cast<size_t>(s)] >= 0) continue;
    std::vector<int> stack{s};
    comp[static_cast<size_t>(s)] = n_comp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[static_cast<size_t>(v)])
        if (comp[static_cast<size_t>(u)] < 0) {
          comp[static_cast<size_t>(u)] = n_comp;
          stack.push_back(u);
        }
    }
    ++n_comp;
  }

  // component names: name of the smallest member vertex, so that an all-even
  // weighting reproduces the input graph on the nose
  std::vector<std::string> names(static_cast<size_t>(n_comp));
  std::vector<int> smallest(static_cast<size_t>(n_comp), -1);
  for (int v = 0; v < g.n(); ++v)
    if (smallest[static_cast<size_t>(comp[static_cast<size_t>(v)])] < 0)
      smallest[static_cast<size_t>(comp[static_cast<size_t>(v)])] = v;
  for (int c = 0; c < n_comp; ++c) names[static_cast<size_t>(c)] = g.vertex_name(smallest[static_cast<size_t>(c)]);

  std::set<std::pair<int, int>> contracted;
  for (auto [u, v] : g.edges()) {
    int cu = comp[static_cast<size_t>(u)], cv = comp[static_cast<size_t>(v)];
    if (cu != cv) contracted.insert({std::min(cu, cv), std::max(cu, cv)});
  }
  return Graph(names, std::vector<std::pair<int, int>>(contracted.begin(), contracted.end()));
}

// ---------------------------------------------------------------------------
// Certificates

struct Certificate {
  enum class Kind { not_arrangement, not_artin, inconclusive };
  Kind kind = Kind::inconclusive;
  std::string justification;

  // witness data; every number is recomputable from the graph alone
  std::vector<std::vector<std::string>> witness_subsets;  // component subsets, by vertex name
  std::map<std::string, Int> witness_numbers;

  bool emitted() const { return kind != Kind::inconclusive; }
  std::string kind_text() const {
    switch (kind) {
      case Kind::not_arrangement:
        return "not_arrangement";
      case Kind::not_artin:
        return "not_artin";
      default:
        return "inconclusive";
    }
  }
};

namespace detail {
inline std::vector<std::string> subset_names(const Graph& g, const VertexSet& w) {
  std::vector<std::string> out;
  for (int v : w.vertices()) out.push_back(g.vertex_name(v));
  return out;
}
}  // namespace detail

// If two distinct components of the kernel's first resonance variety meet in
// positive dimension, the group is not an arrangement group (components of
// an arrangement group's first resonance variety meet pairwise only at 0).
// Vacuous when kappa = 1 (the variety is the whole space).
inline Certificate not_arrangement_certificate(const Graph& g, bool override_gate = false) {
  detail::require_bb_gate(g, override_gate, "not_arrangement_certificate");
  Certificate cert;
  if (g.n() <= 1 || connectivity(g) <= 1) {
    cert.justification =
        "inconclusive: the first resonance variety is empty or the whole space, so the pairwise "
        "intersection test is vacuous";
    return cert;
  }
  ComponentList<SubspaceComponent> comps = resonance_components(g, Target::bb, override_gate);
  for (size_t i = 0; i < comps.components.size(); ++i)
    for (size_t j = i + 1; j < comps.components.size(); ++j) {
      int d = subspace_intersection_dim({comps.components[i], comps.components[j]});
      if (d > 0) {
        cert.kind = Certificate::Kind::not_arrangement;
        cert.witness_subsets.push_back(detail::subset_names(g, comps.components[i].w));
        cert.witness_subsets.push_back(detail::subset_names(g, comps.components[j].w));
        cert.witness_numbers["intersection_dim"] = d;
        cert.witness_numbers["component_dim_1"] = comps.components[i].dim();
        cert.witness_numbers["component_dim_2"] = comps.components[j].dim();
        std::ostringstream os;
        os << "two components of the first resonance variety of the kernel group intersect in "
              "dimension "
           << d << " > 0; for an arrangement group any two components intersect only at 0";
        cert.justification = os.str();
        return cert;
      }
    }
  cert.justification = "inconclusive: all component pairs intersect only at 0";
  return cert;
}

// Certificate that the kernel group of an extra-special disk skeleton is not
// an Artin group: (i) kappa > 1 makes the resonance variety proper, so a
// candidate Artin group's odd contraction would be connected; (ii) the Betti
// numbers force v' = e' + 1, so the contraction would be a tree, whose
// resonance components are in general position; (iii) the r boundary
// components here intersect with codimension r - 1 < r, so general position
// fails.
inline Certificate not_artin_certificate(const Graph& g) {
  Certificate cert;
  std::optional<DiskTriangulation> tri = recognize_extra_special(g);
  if (!tri) {
    cert.justification =
        "inconclusive: graph is not recognized as the 1-skeleton of an extra-special disk "
        "triangulation";
    return cert;
  }
  int kappa = connectivity(g);
  if (kappa <= 1) {
    cert.justification = "inconclusive: kappa <= 1, resonance variety is not proper";
    return cert;
  }
  const Int v = g.n(), e = g.m();
  Int v_prime = v - 1;
  Int e_prime = binomial(v_prime, 2) - (binomial(v, 2) - e);
  if (v_prime != e_prime + 1) {
    cert.justification = "inconclusive: candidate odd contraction is not forced to be a tree";
    return cert;
  }

  std::vector<SubspaceComponent> boundary_components;
  for (auto [u, w] : tri->original_boundary_edges) {
    VertexSet ws = VertexSet::full(g.n());
    ws.remove(u);
    ws.remove(w);
    boundary_components.push_back({ws, Target::bb, iota_pushforward_basis(ws, g.n())});
  }
  const int r = static_cast<int>(boundary_components.size());
  int inter_dim = subspace_intersection_dim(boundary_components);
  int codim = (g.n() - 1) - inter_dim;
  if (codim >= r) {
    cert.justification = "inconclusive: boundary components are in general position";
    return cert;
  }

  cert.kind = Certificate::Kind::not_artin;
  for (const auto& c : boundary_components)
    cert.witness_subsets.push_back(detail::subset_names(g, c.w));
  cert.witness_numbers["v_prime"] = v_prime;
  cert.witness_numbers["e_prime"] = e_prime;
  cert.witness_numbers["r"] = r;
  cert.witness_numbers["intersection_dim"] = inter_dim;
  cert.witness_numbers["intersection_codim"] = codim;
  cert.witness_numbers["kappa"] = kappa;
  std::ostringstream os;
  os << "if the kernel group were an Artin group, its odd contraction would be a connected graph "
        "with v' = "
     << v_prime << " vertices and e' = " << e_prime
     << " edges, hence a tree, whose resonance components are in general position; but the " << r
     << " boundary components intersect with codimension " << codim << " = r - 1 < r";
  cert.justification = os.str();
  return cert;
}

}  // namespace ggi
