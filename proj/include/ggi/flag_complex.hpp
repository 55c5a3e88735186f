#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ggi/graph.hpp"
#include "ggi/linalg.hpp"
#include "ggi/numbers.hpp"

namespace ggi {

// Coefficient field for homology: characteristic 0 (rationals) or a prime p.
struct FieldTag {
  long characteristic = 0;

  static FieldTag rationals() { return FieldTag{0}; }
  static FieldTag prime(long p) {
    if (!is_prime(p)) throw std::invalid_argument("FieldTag: characteristic must be 0 or prime");
    return FieldTag{p};
  }
  std::string name() const { return characteristic == 0 ? "q" : "p" + std::to_string(characteristic); }
};

// Flag complex of a graph: k-simplices are the (k+1)-cliques, stored as
// sorted vertex tuples, grouped by dimension.  Closed under faces by
// construction; the 1-skeleton equals the graph.
struct FlagComplex {
  int n_vertices = 0;
  std::vector<std::vector<std::vector<int>>> simplices;  // [dim][i] = sorted tuple

  int dimension() const { return static_cast<int>(simplices.size()) - 1; }
  int count(int dim) const {
    return (dim >= 0 && dim <= dimension()) ? static_cast<int>(simplices[static_cast<size_t>(dim)].size())
                                            : 0;
  }
  const std::vector<std::vector<int>>& at_dim(int dim) const {
    return simplices[static_cast<size_t>(dim)];
  }
};

inline FlagComplex flag_complex(const Graph& g) {
  FlagComplex k;
  k.n_vertices = g.n();
  for (int size = 1;; ++size) {
    std::vector<std::vector<int>> cl = cliques_of_size(g, size);
    if (cl.empty()) break;
    k.simplices.push_back(std::move(cl));
  }
  return k;
}

// Reduced chain complex of a flag complex over an exact field.  d_k maps
// k-chains to (k-1)-chains; d_0 is the augmentation.  Entry signs follow the
// sorted-tuple convention: omitting the r-th vertex carries (-1)^(r-1).
// d o d = 0 is asserted for every constructed complex.
struct ChainComplex {
  FieldTag field;
  std::vector<int> dims;          // dims[k] = number of k-simplices, k = 0..D
  std::vector<IMatrix> boundary;  // boundary[k] = d_k, k = 0..D (d_0 = augmentation, 1 x dims[0])

  int top_dim() const { return static_cast<int>(dims.size()) - 1; }
};

inline ChainComplex chain_complex(const FlagComplex& k, FieldTag field = FieldTag::rationals()) {
  ChainComplex c;
  c.field = field;
  const int top = k.dimension();
  for (int d = 0; d <= top; ++d) c.dims.push_back(k.count(d));

  // index simplices per dimension
  std::vector<std::map<std::vector<int>, int>> index(static_cast<size_t>(top) + 1);
  for (int d = 0; d <= top; ++d)
    for (int i = 0; i < k.count(d); ++i) index[static_cast<size_t>(d)][k.at_dim(d)[static_cast<size_t>(i)]] = i;

  // augmentation
  IMatrix aug(1, k.count(0));
  for (int i = 0; i < k.count(0); ++i) aug.at(0, i) = 1;
  c.boundary.push_back(std::move(aug));

  for (int d = 1; d <= top; ++d) {
    IMatrix b(k.count(d - 1), k.count(d));
    for (int j = 0; j < k.count(d); ++j) {
      const std::vector<int>& s = k.at_dim(d)[static_cast<size_t>(j)];
      int sign = 1;
      for (size_t r = 0; r < s.size(); ++r) {
        std::vector<int> face;
        face.reserve(s.size() - 1);
        for (size_t t = 0; t < s.size(); ++t)
          if (t != r) face.push_back(s[t]);
        int i = index[static_cast<size_t>(d) - 1].at(face);
        b.at(i, j) += sign;
        sign = -sign;
      }
    }
    c.boundary.push_back(std::move(b));
  }

  // d o d = 0, including the augmentation against d_1
  for (int d = 1; d <= top; ++d) {
    IMatrix prod = imul(c.boundary[static_cast<size_t>(d) - 1], c.boundary[static_cast<size_t>(d)]);
    if (!prod.is_zero()) throw identity_violation("chain complex: d o d != 0");
  }
  return c;
}

inline int matrix_rank_over(const IMatrix& m, FieldTag field) {
  if (m.rows == 0 || m.cols == 0) return 0;
  return field.characteristic == 0 ? rank_rational(m) : rank_mod_p(m, field.characteristic);
}

// Reduced Betti numbers together with cycle and boundary dimensions.
struct HomologySummary {
  FieldTag field;
  std::vector<int> chains;      // dim C_j
  std::vector<int> cycles;      // dim Z_j (reduced: Z_0 = ker augmentation)
  std::vector<int> boundaries;  // dim B_j = rank d_{j+1}
  std::vector<int> reduced_betti;

  int betti(int j) const {
    return (j >= 0 && j < static_cast<int>(reduced_betti.size()))
               ? reduced_betti[static_cast<size_t>(j)]
               : 0;
  }
  int boundary_dim(int j) const {
    return (j >= 0 && j < static_cast<int>(boundaries.size())) ? boundaries[static_cast<size_t>(j)]
                                                               : 0;
  }
};

inline HomologySummary homology_ranks(const FlagComplex& k, FieldTag field = FieldTag::rationals()) {
  ChainComplex c = chain_complex(k, field);
  HomologySummary h;
  h.field = field;
  const int top = c.top_dim();
  for (int j = 0; j <= top; ++j) {
    int rank_dj = matrix_rank_over(c.boundary[static_cast<size_t>(j)], field);  // d_j: C_j -> C_{j-1}
    int z = c.dims[static_cast<size_t>(j)] - rank_dj;
    int b = j < top ? matrix_rank_over(c.boundary[static_cast<size_t>(j) + 1], field) : 0;
    h.chains.push_back(c.dims[static_cast<size_t>(j)]);
    h.cycles.push_back(z);
    h.boundaries.push_back(b);
    h.reduced_betti.push_back(z - b);
  }
  return h;
}

// H_r(N, k) as a module over the Laurent ring k[Z]: a free part of rank
// dim H~_{r-1}(flag complex) and a trivial part of rank dim B_{r-1}.
// The group is finitely generated in degree r iff the free rank vanishes.
struct BBHomologyModule {
  int degree = 0;
  int free_rank = 0;
  int trivial_rank = 0;
};

inline BBHomologyModule bb_homology_module(const Graph& g, FieldTag field, int r) {
  if (r < 1) throw std::invalid_argument("bb_homology_module: degree must be >= 1");
  if (!is_connected(g))
    throw gate_refused("bb_homology_module: kernel group is finitely generated only for connected graphs");
  HomologySummary h = homology_ranks(flag_complex(g), field);
  BBHomologyModule m;
  m.degree = r;
  m.free_rank = (r - 1 < static_cast<int>(h.reduced_betti.size())) ? h.betti(r - 1) : 0;
  m.trivial_rank = h.boundary_dim(r - 1);
  return m;
}

// H_1 of the complex with integer coefficients: free rank plus torsion
// invariant factors, from Smith normal form of d_2 (torsion of C_1/B_1
// equals torsion of H_1 since C_1/Z_1 is free).
struct IntegralH1 {
  int rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1
  bool trivial() const { return rank == 0 && torsion.empty(); }
};

inline IntegralH1 integral_h1(const FlagComplex& k) {
  ChainComplex c = chain_complex(k);
  IntegralH1 out;
  if (c.top_dim() < 1) return out;  // no edges: H_1 = 0
  int rank_d1 = rank_rational(c.boundary[1]);
  int z1 = c.dims[1] - rank_d1;
  if (c.top_dim() >= 2) {
    std::vector<Int> factors = smith_normal_form(c.boundary[2]);
    out.rank = z1 - static_cast<int>(factors.size());
    for (const Int& f : factors)
      if (f > 1) out.torsion.push_back(f);
  } else {
    out.rank = z1;
  }
  return out;
}

namespace detail {
// Greedy elementary collapses.  A simplex is a free face when it has exactly
// one coface of one dimension higher (in a complex this forces no larger
// coface at all).  Returns true when the complex collapses to a single vertex.
inline bool greedy_collapses_to_point(const FlagComplex& k) {
  std::set<std::vector<int>> present;
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& s : k.at_dim(d)) present.insert(s);
  if (present.empty()) return false;

  bool removed = true;
  while (removed) {
    removed = false;
    // deterministic scan: by dimension descending, then lexicographic
    std::vector<std::vector<int>> order(present.begin(), present.end());
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a < b;
    });
    for (const auto& s : order) {
      if (!present.count(s)) continue;
      // cofaces of dimension +1: insert one extra vertex
      std::vector<std::vector<int>> cofaces;
      // candidate extra vertices: bounded by scanning all vertices
      for (int v = 0; v < k.n_vertices && cofaces.size() < 2; ++v) {
        if (std::binary_search(s.begin(), s.end(), v)) continue;
        std::vector<int> t = s;
        t.insert(std::lower_bound(t.begin(), t.end(), v), v);
        if (present.count(t)) cofaces.push_back(std::move(t));
      }
      if (cofaces.size() == 1) {
        present.erase(s);
        present.erase(cofaces[0]);
        removed = true;
      }
    }
  }
  return present.size() == 1 && present.begin()->size() == 1;
}

// Is the 1-skeleton a cone (some vertex adjacent to all others)?
inline bool one_skeleton_is_cone(const FlagComplex& k) {
  if (k.n_vertices == 0) return false;
  if (k.n_vertices == 1) return true;
  std::vector<std::vector<bool>> adj(static_cast<size_t>(k.n_vertices),
                                     std::vector<bool>(static_cast<size_t>(k.n_vertices), false));
  if (k.dimension() >= 1)
    for (const auto& e : k.at_dim(1)) {
      adj[static_cast<size_t>(e[0])][static_cast<size_t>(e[1])] = true;
      adj[static_cast<size_t>(e[1])][static_cast<size_t>(e[0])] = true;
    }
  for (int v = 0; v < k.n_vertices; ++v) {
    bool apex = true;
    for (int u = 0; u < k.n_vertices && apex; ++u)
      if (u != v && !adj[static_cast<size_t>(v)][static_cast<size_t>(u)]) apex = false;
    if (apex) return true;
  }
  return false;
}
}  // namespace detail

// Three-valued simple-connectivity gate.  "no" is certain (disconnected, or
// nontrivial integral H_1); "yes" is certified by a collapse to a point, a
// cone apex, or a validated disk triangulation supplied by the caller;
// everything else is "unknown", and operations whose statements require
// simple connectivity demand an explicit override.
struct SimplyConnectedStatus {
  enum class Value { yes, no, unknown };
  Value value = Value::unknown;
  std::string reason;

  bool yes() const { return value == Value::yes; }
  bool no() const { return value == Value::no; }
  std::string text() const {
    switch (value) {
      case Value::yes:
        return "yes";
      case Value::no:
        return "no";
      default:
        return "unknown";
    }
  }
};

inline SimplyConnectedStatus simply_connected_status(const FlagComplex& k,
                                                     bool validated_disk = false) {
  SimplyConnectedStatus st;
  if (k.n_vertices == 0) {
    st.value = SimplyConnectedStatus::Value::no;
    st.reason = "empty complex";
    return st;
  }
  // connectivity of the 1-skeleton via a union-find over edges
  {
    std::vector<int> parent(static_cast<size_t>(k.n_vertices));
    for (int i = 0; i < k.n_vertices; ++i) parent[static_cast<size_t>(i)] = i;
    std::function<int(int)> find = [&](int x) {
      while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      return x;
    };
    if (k.dimension() >= 1)
      for (const auto& e : k.at_dim(1)) parent[static_cast<size_t>(find(e[0]))] = find(e[1]);
    int roots = 0;
    for (int i = 0; i < k.n_vertices; ++i)
      if (find(i) == i) ++roots;
    if (roots > 1) {
      st.value = SimplyConnectedStatus::Value::no;
      st.reason = "flag complex disconnected";
      return st;
    }
  }
  IntegralH1 h1 = integral_h1(k);
  if (!h1.trivial()) {
    st.value = SimplyConnectedStatus::Value::no;
    st.reason = "integral H_1 of the flag complex is nontrivial";
    return st;
  }
  if (validated_disk) {
    st.value = SimplyConnectedStatus::Value::yes;
    st.reason = "validated disk triangulation";
    return st;
  }
  if (detail::one_skeleton_is_cone(k)) {
    st.value = SimplyConnectedStatus::Value::yes;
    st.reason = "graph is a cone";
    return st;
  }
  if (detail::greedy_collapses_to_point(k)) {
    st.value = SimplyConnectedStatus::Value::yes;
    st.reason = "collapses to a point";
    return st;
  }
  st.value = SimplyConnectedStatus::Value::unknown;
  st.reason = "H_1 trivial but no collapse certificate found";
  return st;
}

inline SimplyConnectedStatus simply_connected_status(const Graph& g, bool validated_disk = false) {
  return simply_connected_status(flag_complex(g), validated_disk);
}

}  // namespace ggi
