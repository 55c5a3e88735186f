#pragma once

// Shared fixtures and independently coded oracles for the test suites.  The
// oracles deliberately avoid the library code paths they are used to check.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "ggi/graph.hpp"
#include "ggi/numbers.hpp"
#include "ggi/triangulation.hpp"

namespace ggi::testsupport {

// --------------------------------------------------------------------------
// Fixtures

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph::from_edges(n, edges);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

inline Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}

inline Graph p3() { return path_graph(3); }
inline Graph c4() { return cycle_graph(4); }
inline Graph k4() { return complete_graph(4); }

// Six-vertex skeleton of a disk triangulation with four triangles
// {1,2,4}, {2,4,5}, {2,3,5}, {4,5,6} in the fixed order v1..v6.
inline Graph disk6() {
  return Graph::from_edges(
      6, {{0, 1}, {0, 3}, {1, 3}, {1, 2}, {1, 4}, {2, 4}, {3, 4}, {3, 5}, {4, 5}});
}

// The spanning tree used alongside disk6: {v1v2, v2v4, v2v5, v2v3, v5v6}.
inline std::vector<std::pair<int, int>> disk6_tree() {
  return {{0, 1}, {1, 3}, {1, 4}, {1, 2}, {4, 5}};
}

// Square with a diagonal, as a 1-step special build.
inline DiskTriangulation square_diagonal() {
  SpecialBuildScript s;
  s.start = {"v1", "v2", "v3"};
  s.steps = {{"v1", "v3", "v4"}};
  return build_special(s);
}

// Its extra-special extension: 8 vertices, 13 edges, r = 4.
inline DiskTriangulation extra8() { return extend_extra_special(square_diagonal()); }

// Octahedron K_{2,2,2}: flag complex is a 2-sphere.
inline Graph octahedron() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (!(j == i + 1 && i % 2 == 0)) edges.emplace_back(i, j);
  return Graph::from_edges(6, edges);
}

inline Graph two_triangles() {
  return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
}

// --------------------------------------------------------------------------
// Independent oracles

// Cut coefficients by plain recursive subset enumeration plus union-find
// component counting (the library uses combination iteration plus BFS).
inline std::vector<Int> cut_coefficients_oracle(const Graph& g) {
  const int n = g.n();
  std::vector<Int> c(static_cast<size_t>(n) + 1, Int(0));
  std::vector<int> members;
  std::function<void(int)> rec = [&](int next) {
    if (next == n) {
      const int k = static_cast<int>(members.size());
      if (k < 2) return;
      std::vector<int> uf(members.size());
      std::iota(uf.begin(), uf.end(), 0);
      std::function<int(int)> find = [&](int x) {
        while (uf[static_cast<size_t>(x)] != x) x = uf[static_cast<size_t>(x)];
        return x;
      };
      for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
          if (g.adjacent(members[i], members[j]))
            uf[static_cast<size_t>(find(static_cast<int>(i)))] = find(static_cast<int>(j));
      int comps = 0;
      for (size_t i = 0; i < members.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++comps;
      c[static_cast<size_t>(k)] += comps - 1;
      return;
    }
    rec(next + 1);
    members.push_back(next);
    rec(next + 1);
    members.pop_back();
  };
  rec(0);
  return c;
}

// Chen ranks of the free group F_n: theta_1 = n, theta_k = (k-1) C(n+k-2, k).
inline Int chen_rank_free(long n, int k) {
  if (k == 1) return Int(n);
  return Int(k - 1) * binomial(Int(n) + k - 2, k);
}

// All labeled trees on n vertices, decoded from Pruefer sequences.
inline std::vector<Graph> all_labeled_trees(int n) {
  std::vector<Graph> out;
  if (n == 1) {
    out.push_back(Graph::from_edges(1, {}));
    return out;
  }
  if (n == 2) {
    out.push_back(Graph::from_edges(2, {{0, 1}}));
    return out;
  }
  std::vector<int> seq(static_cast<size_t>(n) - 2, 0);
  for (;;) {
    // decode
    std::vector<int> degree(static_cast<size_t>(n), 1);
    for (int s : seq) degree[static_cast<size_t>(s)]++;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg = degree;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
      if (deg[static_cast<size_t>(v)] == 1) leaves.insert(v);
    std::vector<int> s = seq;
    for (int si = 0; si < n - 2; ++si) {
      int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      int v = s[static_cast<size_t>(si)];
      edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
      if (--deg[static_cast<size_t>(v)] == 1) leaves.insert(v);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.emplace_back(std::min(a, b), std::max(a, b));
    out.push_back(Graph::from_edges(n, edges));

    // next sequence
    int i = n - 3;
    while (i >= 0 && seq[static_cast<size_t>(i)] == n - 1) seq[static_cast<size_t>(i--)] = 0;
    if (i < 0) break;
    seq[static_cast<size_t>(i)]++;
  }
  return out;
}

// Connected graphs on n <= 6 vertices up to isomorphism, by canonical
// adjacency masks minimized over all vertex permutations.
inline const std::vector<Graph>& connected_graphs_up_to_iso(int n) {
  static std::map<int, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n > 6) throw std::invalid_argument("connected_graphs_up_to_iso: n <= 6 only");

  const int pairs = n * (n - 1) / 2;
  auto pair_index = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    int idx = 0;
    for (int a = 0; a < i; ++a) idx += n - 1 - a;
    return idx + (j - i - 1);
  };

  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  std::set<unsigned long> canon;
  std::vector<Graph> graphs;
  const unsigned long total = 1UL << pairs;
  for (unsigned long mask = 0; mask < total; ++mask) {
    // connectivity by union-find
    std::vector<int> uf(static_cast<size_t>(n));
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (uf[static_cast<size_t>(x)] != x) x = uf[static_cast<size_t>(x)];
      return x;
    };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (mask & (1UL << pair_index(i, j))) uf[static_cast<size_t>(find(i))] = find(j);
    int roots = 0;
    for (int v = 0; v < n; ++v)
      if (find(v) == v) ++roots;
    if (roots != 1) continue;

    unsigned long best = ~0UL;
    for (const auto& p : perms) {
      unsigned long m = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (mask & (1UL << pair_index(i, j))) m |= 1UL << pair_index(p[static_cast<size_t>(i)], p[static_cast<size_t>(j)]);
      best = std::min(best, m);
    }
    if (canon.insert(best).second) {
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (best & (1UL << pair_index(i, j))) edges.emplace_back(i, j);
      graphs.push_back(Graph::from_edges(n, edges));
    }
  }
  return cache.emplace(n, std::move(graphs)).first->second;
}

}  // namespace ggi::testsupport
