#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ggi/numbers.hpp"

namespace ggi {

// Subset of the vertex index range {0, ..., n-1}, with set algebra.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), bits_(static_cast<size_t>(n)) {}

  static VertexSet of(int n, const std::vector<int>& vertices) {
    VertexSet s(n);
    for (int v : vertices) s.add(v);
    return s;
  }
  static VertexSet full(int n) {
    VertexSet s(n);
    s.bits_.set();
    return s;
  }

  int universe_size() const { return n_; }
  int count() const { return static_cast<int>(bits_.count()); }
  bool empty() const { return bits_.none(); }

  void add(int v) {
    check(v);
    bits_.set(static_cast<size_t>(v));
  }
  void remove(int v) {
    check(v);
    bits_.reset(static_cast<size_t>(v));
  }
  bool contains(int v) const { return v >= 0 && v < n_ && bits_.test(static_cast<size_t>(v)); }

  VertexSet set_union(const VertexSet& o) const { return wrap(bits_ | o.bits_); }
  VertexSet set_intersection(const VertexSet& o) const { return wrap(bits_ & o.bits_); }
  VertexSet complement() const { return wrap(~bits_); }
  bool is_subset_of(const VertexSet& o) const { return bits_.is_subset_of(o.bits_); }

  std::vector<int> vertices() const {
    std::vector<int> out;
    for (size_t v = bits_.find_first(); v != boost::dynamic_bitset<>::npos;
         v = bits_.find_next(v))
      out.push_back(static_cast<int>(v));
    return out;
  }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // canonical order: by size, then lexicographic on the sorted index list
  bool operator<(const VertexSet& o) const {
    if (count() != o.count()) return count() < o.count();
    return vertices() < o.vertices();
  }

 private:
  void check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex index out of range");
  }
  VertexSet wrap(boost::dynamic_bitset<> b) const {
    VertexSet s(n_);
    s.bits_ = std::move(b);
    return s;
  }

  int n_ = 0;
  boost::dynamic_bitset<> bits_;
};

// Finite simple graph with a fixed linear order on the vertices.  The order
// is immutable after construction; every sign convention downstream (chain
// complex boundaries, directed triangles, Alexander relators) depends on it.
// Edges are stored canonically with the smaller index first.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<std::string> vertex_names, const std::vector<std::pair<int, int>>& edges)
      : names_(std::move(vertex_names)) {
    const int n = static_cast<int>(names_.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (names_[i] == names_[j])
          throw std::invalid_argument("Graph: duplicate vertex name '" + names_[i] + "'");
    adj_.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    for (auto [u, v] : edges) add_edge_checked(u, v);
    finalize();
  }

  // vertices named v1..vn
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
    return Graph(std::move(names), edges);
  }

  int n() const { return static_cast<int>(names_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& vertex_name(int v) const { return names_.at(static_cast<size_t>(v)); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool adjacent(int u, int v) const {
    return u != v && adj_[static_cast<size_t>(u)][static_cast<size_t>(v)];
  }
  const std::vector<int>& neighbors(int v) const { return nbrs_[static_cast<size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(nbrs_[static_cast<size_t>(v)].size()); }

  bool has_edge(int u, int v) const { return u >= 0 && v >= 0 && u < n() && v < n() && adjacent(u, v); }

  int vertex_index(const std::string& name) const {
    for (int i = 0; i < n(); ++i)
      if (names_[static_cast<size_t>(i)] == name) return i;
    return -1;
  }

  bool operator==(const Graph& o) const { return names_ == o.names_ && edges_ == o.edges_; }

 private:
  void add_edge_checked(int u, int v) {
    const int n_ = n();
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
    if (adj_[static_cast<size_t>(u)][static_cast<size_t>(v)])
      throw std::invalid_argument("Graph: duplicate edge");
    adj_[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
    adj_[static_cast<size_t>(v)][static_cast<size_t>(u)] = true;
  }

  void finalize() {
    const int n_ = n();
    edges_.clear();
    nbrs_.assign(static_cast<size_t>(n_), {});
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adj_[static_cast<size_t>(u)][static_cast<size_t>(v)]) edges_.emplace_back(u, v);
    for (auto [u, v] : edges_) {
      nbrs_[static_cast<size_t>(u)].push_back(v);
      nbrs_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& ns : nbrs_) std::sort(ns.begin(), ns.end());
  }

  std::vector<std::string> names_;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> nbrs_;
};

// A graph together with edge weights m(e) >= 2.
struct WeightedGraph {
  Graph graph;
  std::map<std::pair<int, int>, long> weights;  // keyed by canonical edge

  WeightedGraph(Graph g, std::map<std::pair<int, int>, long> w)
      : graph(std::move(g)), weights(std::move(w)) {
    for (auto [u, v] : graph.edges()) {
      auto it = weights.find({u, v});
      if (it == weights.end())
        throw std::invalid_argument("WeightedGraph: missing weight for an edge");
      if (it->second < 2) throw std::invalid_argument("WeightedGraph: weights must be >= 2");
    }
    if (weights.size() != graph.edges().size())
      throw std::invalid_argument("WeightedGraph: weight for a non-edge");
  }
};

// ---------------------------------------------------------------------------
// Operations

inline Graph induced_subgraph(const Graph& g, const VertexSet& w) {
  if (w.universe_size() != g.n())
    throw std::out_of_range("induced_subgraph: subset universe does not match graph");
  std::vector<int> verts = w.vertices();  // inherits the vertex order
  std::vector<std::string> names;
  names.reserve(verts.size());
  std::vector<int> local(static_cast<size_t>(g.n()), -1);
  for (size_t i = 0; i < verts.size(); ++i) {
    names.push_back(g.vertex_name(verts[i]));
    local[static_cast<size_t>(verts[i])] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (w.contains(u) && w.contains(v))
      edges.emplace_back(local[static_cast<size_t>(u)], local[static_cast<size_t>(v)]);
  return Graph(std::move(names), edges);
}

// Connected components restricted to a subset, without building the subgraph.
inline std::vector<std::vector<int>> components_within(const Graph& g, const VertexSet& w) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(static_cast<size_t>(g.n()), false);
  for (int s : w.vertices()) {
    if (seen[static_cast<size_t>(s)]) continue;
    std::vector<int> comp;
    std::vector<int> stack{s};
    seen[static_cast<size_t>(s)] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : g.neighbors(v))
        if (w.contains(u) && !seen[static_cast<size_t>(u)]) {
          seen[static_cast<size_t>(u)] = true;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  return components_within(g, VertexSet::full(g.n()));
}

// Number of components minus one; -1 for the empty vertex set (reduced
// homology convention).
inline int reduced_b0_within(const Graph& g, const VertexSet& w) {
  return static_cast<int>(components_within(g, w).size()) - 1;
}

inline int reduced_b0(const Graph& g) { return reduced_b0_within(g, VertexSet::full(g.n())); }

inline bool is_connected(const Graph& g) { return reduced_b0(g) <= 0; }

inline bool is_connected_within(const Graph& g, const VertexSet& w) {
  return reduced_b0_within(g, w) <= 0;
}

namespace detail {
// Enumerate all size-k subsets of {0..n-1} in lexicographic order.
template <class F>
void for_each_combination(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  for (;;) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}
}  // namespace detail

// Maximum r such that deleting any vertex set of size < r leaves a connected,
// nonempty induced subgraph.  Capped at |V|-1 (so kappa(K_n) = n-1); returns 0
// for a disconnected graph.
inline int connectivity(const Graph& g) {
  const int n = g.n();
  if (n < 1) throw std::invalid_argument("connectivity: graph must have at least one vertex");
  if (!is_connected(g)) return 0;
  for (int s = 1; s <= n - 2; ++s) {
    bool found_cut = false;
    detail::for_each_combination(n, s, [&](const std::vector<int>& del) {
      if (found_cut) return;
      VertexSet keep = VertexSet::full(n);
      for (int v : del) keep.remove(v);
      if (!is_connected_within(g, keep)) found_cut = true;
    });
    if (found_cut) return s;
  }
  return n - 1;
}

// (f_0, f_1, ..., f_omega) with f_0 = 1, f_k = number of k-cliques.
inline std::vector<Int> clique_counts(const Graph& g) {
  std::vector<Int> counts{Int(1)};
  // extend cliques one vertex at a time, candidates kept in increasing order
  std::vector<int> clique;
  auto bump = [&](size_t size) {
    while (counts.size() <= size) counts.push_back(Int(0));
    counts[size] += 1;
  };
  std::function<void(const std::vector<int>&)> extend = [&](const std::vector<int>& cands) {
    for (size_t i = 0; i < cands.size(); ++i) {
      int v = cands[i];
      clique.push_back(v);
      bump(clique.size());
      std::vector<int> next;
      for (size_t j = i + 1; j < cands.size(); ++j)
        if (g.adjacent(v, cands[j])) next.push_back(cands[j]);
      if (!next.empty()) extend(next);
      clique.pop_back();
    }
  };
  std::vector<int> all(static_cast<size_t>(g.n()));
  for (int i = 0; i < g.n(); ++i) all[static_cast<size_t>(i)] = i;
  extend(all);
  return counts;
}

// All k-cliques as sorted vertex tuples, k = size.
inline std::vector<std::vector<int>> cliques_of_size(const Graph& g, int size) {
  std::vector<std::vector<int>> out;
  if (size <= 0) return out;
  std::vector<int> clique;
  std::function<void(const std::vector<int>&)> extend = [&](const std::vector<int>& cands) {
    if (static_cast<int>(clique.size()) == size) {
      out.push_back(clique);
      return;
    }
    for (size_t i = 0; i < cands.size(); ++i) {
      int v = cands[i];
      clique.push_back(v);
      std::vector<int> next;
      for (size_t j = i + 1; j < cands.size(); ++j)
        if (g.adjacent(v, cands[j])) next.push_back(cands[j]);
      extend(next);
      clique.pop_back();
    }
  };
  std::vector<int> all(static_cast<size_t>(g.n()));
  for (int i = 0; i < g.n(); ++i) all[static_cast<size_t>(i)] = i;
  extend(all);
  std::sort(out.begin(), out.end());
  return out;
}

// Complement edge set, canonical order.
inline std::vector<std::pair<int, int>> non_edges(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

// Cut coefficients c_j = sum of reduced b0 over all j-element vertex subsets,
// j = 2..|V|.  Exponential in |V|; an optional size cap yields a partial
// result that is explicitly flagged, never silently wrong.
struct CutCoefficients {
  std::vector<Int> c;  // index = j, entries 0..n (c[0], c[1] always 0)
  int n_vertices = 0;
  bool truncated = false;
  int max_size_computed = 0;
};

inline CutCoefficients cut_coefficients(const Graph& g,
                                        std::optional<int> max_subset_size = std::nullopt) {
  const int n = g.n();
  CutCoefficients out;
  out.n_vertices = n;
  out.c.assign(static_cast<size_t>(n) + 1, Int(0));
  int cap = max_subset_size.value_or(n);
  if (cap < n && cap < 2) cap = std::max(cap, 0);
  out.max_size_computed = std::min(cap, n);
  out.truncated = cap < n;
  for (int j = 2; j <= std::min(cap, n); ++j) {
    Int cj = 0;
    detail::for_each_combination(n, j, [&](const std::vector<int>& idx) {
      VertexSet w = VertexSet::of(n, idx);
      int b0 = reduced_b0_within(g, w);
      if (b0 > 0) cj += b0;
    });
    out.c[static_cast<size_t>(j)] = cj;
  }
  return out;
}

// All subsets W with disconnected induced subgraph, maximal under inclusion.
// A disconnected W is maximal iff every one-vertex extension is connected:
// if all W+v are connected then any W+S is connected as well, since each
// added vertex has a neighbor in W.
inline std::vector<VertexSet> maximal_disconnected_subsets(const Graph& g) {
  const int n = g.n();
  if (n > 25)
    throw std::invalid_argument(
        "maximal_disconnected_subsets: exhaustive enumeration limited to 25 vertices");
  std::vector<VertexSet> out;
  const unsigned long long total = 1ULL << n;
  for (unsigned long long mask = 0; mask < total; ++mask) {
    VertexSet w(n);
    for (int v = 0; v < n; ++v)
      if (mask & (1ULL << v)) w.add(v);
    if (w.count() < 2) continue;
    if (is_connected_within(g, w)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (w.contains(v)) continue;
      VertexSet bigger = w;
      bigger.add(v);
      if (!is_connected_within(g, bigger)) maximal = false;
    }
    if (maximal) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ggi
