#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ggi/flag_complex.hpp"
#include "ggi/graph.hpp"
#include "ggi/rng.hpp"

namespace ggi {

// Replayable build log for a disk triangulation: the starting triangle and
// one attachment step per added triangle (new vertex glued onto an existing
// boundary edge).
struct BuildStep {
  std::string edge_u, edge_v;  // boundary edge the triangle is attached to
  std::string vertex;          // the new vertex
};

struct BuildLog {
  std::array<std::string, 3> start{};
  std::vector<BuildStep> steps;
  bool extended = false;  // extra-special extension applied after the steps
  std::optional<std::uint64_t> seed;
};

// Triangulation of the 2-disk: 1-skeleton, triangle list, boundary circuit
// (a simple cycle of vertices), and the build log.  For extra-special builds
// the boundary circuit of the underlying special triangulation is kept; its
// edges index the distinguished resonance components downstream.
struct DiskTriangulation {
  Graph graph;
  std::vector<std::array<int, 3>> triangles;  // sorted triples
  std::vector<int> boundary;                  // vertex circuit, cyclic
  BuildLog log;

  bool extra_special = false;
  int r_original_boundary = 0;
  std::vector<std::pair<int, int>> original_boundary_edges;

  std::vector<std::pair<int, int>> boundary_edges() const {
    std::vector<std::pair<int, int>> out;
    const int L = static_cast<int>(boundary.size());
    for (int i = 0; i < L; ++i) {
      int u = boundary[static_cast<size_t>(i)];
      int v = boundary[static_cast<size_t>((i + 1) % L)];
      out.emplace_back(std::min(u, v), std::max(u, v));
    }
    return out;
  }
};

struct SpecialBuildScript {
  std::array<std::string, 3> start{"v1", "v2", "v3"};
  std::vector<BuildStep> steps;
};

namespace detail {
// incremental state while building; vertices are named, indices follow
// introduction order
struct DiskBuilder {
  std::vector<std::string> names;
  std::map<std::string, int> index;
  std::set<std::pair<int, int>> edges;
  std::vector<std::array<int, 3>> triangles;
  std::vector<int> boundary;

  int add_vertex(const std::string& name) {
    if (index.count(name))
      throw std::invalid_argument("disk build: vertex name reused: " + name);
    int i = static_cast<int>(names.size());
    names.push_back(name);
    index[name] = i;
    return i;
  }
  void add_edge(int u, int v) { edges.insert({std::min(u, v), std::max(u, v)}); }
  void add_triangle(int a, int b, int c) {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    triangles.push_back(t);
  }

  void start(const std::array<std::string, 3>& s) {
    int a = add_vertex(s[0]), b = add_vertex(s[1]), c = add_vertex(s[2]);
    add_edge(a, b);
    add_edge(a, c);
    add_edge(b, c);
    add_triangle(a, b, c);
    boundary = {a, b, c};
  }

  // position i such that the boundary edge (boundary[i], boundary[i+1]) is {u,v}
  int boundary_position(int u, int v) const {
    const int L = static_cast<int>(boundary.size());
    for (int i = 0; i < L; ++i) {
      int a = boundary[static_cast<size_t>(i)], b = boundary[static_cast<size_t>((i + 1) % L)];
      if ((a == u && b == v) || (a == v && b == u)) return i;
    }
    return -1;
  }

  void attach(const BuildStep& step, int step_index) {
    auto iu = index.find(step.edge_u);
    auto iv = index.find(step.edge_v);
    if (iu == index.end() || iv == index.end())
      throw std::invalid_argument("disk build: step " + std::to_string(step_index) +
                                  " names an unknown vertex");
    int pos = boundary_position(iu->second, iv->second);
    if (pos < 0)
      throw std::invalid_argument("disk build: step " + std::to_string(step_index) +
                                  " attaches to a non-boundary edge " + step.edge_u + "-" +
                                  step.edge_v);
    int w = add_vertex(step.vertex);
    int u = boundary[static_cast<size_t>(pos)];
    int v = boundary[static_cast<size_t>((pos + 1) % boundary.size())];
    add_edge(u, w);
    add_edge(v, w);
    add_triangle(u, v, w);
    boundary.insert(boundary.begin() + pos + 1, w);  // replace edge (u,v) by (u,w),(w,v)
  }

  DiskTriangulation finish(BuildLog log) const {
    std::vector<std::pair<int, int>> edge_list(edges.begin(), edges.end());
    DiskTriangulation d;
    d.graph = Graph(names, edge_list);
    d.triangles = triangles;
    std::sort(d.triangles.begin(), d.triangles.end());
    d.boundary = boundary;
    d.log = std::move(log);
    return d;
  }
};
}  // namespace detail

// Build a special triangulation from a scripted sequence of attachments.
// Starts from a single triangle; each step adds one new vertex and two new
// edges on the chosen boundary edge.
inline DiskTriangulation build_special(const SpecialBuildScript& script) {
  detail::DiskBuilder b;
  b.start(script.start);
  int i = 0;
  for (const BuildStep& s : script.steps) b.attach(s, i++);
  BuildLog log;
  log.start = script.start;
  log.steps = script.steps;
  return b.finish(std::move(log));
}

// Seeded random build: each step picks a uniformly random current boundary
// edge.  The build log makes the artifact replayable.
inline DiskTriangulation build_special_random(std::uint64_t seed, int n_steps) {
  if (n_steps < 0) throw std::invalid_argument("build_special_random: negative step count");
  SeededRng rng(seed);
  detail::DiskBuilder b;
  b.start({"v1", "v2", "v3"});
  BuildLog log;
  log.start = {"v1", "v2", "v3"};
  log.seed = seed;
  for (int s = 0; s < n_steps; ++s) {
    const int L = static_cast<int>(b.boundary.size());
    int pos = static_cast<int>(rng.below(static_cast<std::uint64_t>(L)));
    BuildStep step;
    step.edge_u = b.names[static_cast<size_t>(b.boundary[static_cast<size_t>(pos)])];
    step.edge_v = b.names[static_cast<size_t>(b.boundary[static_cast<size_t>((pos + 1) % L)])];
    step.vertex = "v" + std::to_string(b.names.size() + 1);
    b.attach(step, s);
    log.steps.push_back(std::move(step));
  }
  return b.finish(std::move(log));
}

struct ValidationReport {
  bool pass = true;
  std::vector<std::string> failures;

  void fail(const std::string& why) {
    pass = false;
    failures.push_back(why);
  }
};

// Checks: the count identity 2|V| - |E| = 3, the flag property (3-cliques of
// the skeleton are exactly the listed triangles and there is no 4-clique),
// simplicity of the boundary circuit, agreement of the stored circuit with
// the recomputed boundary (edges lying in exactly one triangle), and, for
// extra-special builds, kappa > 1.
inline ValidationReport validate(const DiskTriangulation& d) {
  ValidationReport r;
  const Graph& g = d.graph;

  if (2 * g.n() - g.m() != 3)
    r.fail("count identity 2|V|-|E|=3 fails: 2*" + std::to_string(g.n()) + "-" +
           std::to_string(g.m()) + " != 3");

  std::vector<std::vector<int>> cl3 = cliques_of_size(g, 3);
  std::set<std::array<int, 3>> clique_set;
  for (const auto& t : cl3) clique_set.insert({t[0], t[1], t[2]});
  std::set<std::array<int, 3>> listed(d.triangles.begin(), d.triangles.end());
  if (clique_set != listed) r.fail("flag property fails: 3-cliques differ from listed triangles");
  if (!cliques_of_size(g, 4).empty()) r.fail("flag property fails: graph contains a 4-clique");

  const int L = static_cast<int>(d.boundary.size());
  if (L < 3) r.fail("boundary circuit too short");
  std::set<int> bset(d.boundary.begin(), d.boundary.end());
  if (static_cast<int>(bset.size()) != L) r.fail("boundary circuit is not simple");
  for (int i = 0; i < L; ++i) {
    int u = d.boundary[static_cast<size_t>(i)], v = d.boundary[static_cast<size_t>((i + 1) % L)];
    if (!g.has_edge(u, v)) r.fail("boundary circuit uses a non-edge");
  }

  // recompute boundary edges: contained in exactly one triangle
  std::map<std::pair<int, int>, int> tri_count;
  for (const auto& t : d.triangles) {
    tri_count[{t[0], t[1]}]++;
    tri_count[{t[0], t[2]}]++;
    tri_count[{t[1], t[2]}]++;
  }
  std::set<std::pair<int, int>> recomputed;
  for (auto [u, v] : g.edges()) {
    int c = tri_count.count({u, v}) ? tri_count[{u, v}] : 0;
    if (c == 0) r.fail("edge " + g.vertex_name(u) + "-" + g.vertex_name(v) + " lies in no triangle");
    if (c > 2)
      r.fail("edge " + g.vertex_name(u) + "-" + g.vertex_name(v) + " lies in more than two triangles");
    if (c == 1) recomputed.insert({u, v});
  }
  auto be = d.boundary_edges();
  std::set<std::pair<int, int>> stored(be.begin(), be.end());
  if (stored != recomputed) r.fail("stored boundary circuit disagrees with recomputed boundary");

  if (d.extra_special) {
    if (d.r_original_boundary < 3) r.fail("extra-special build must record r >= 3");
    if (static_cast<int>(d.original_boundary_edges.size()) != d.r_original_boundary)
      r.fail("extra-special build: original boundary edge count mismatch");
    for (auto [u, v] : d.original_boundary_edges)
      if (!g.has_edge(u, v)) r.fail("extra-special build: recorded original boundary non-edge");
    if (g.n() >= 1 && connectivity(g) <= 1) r.fail("extra-special build must have kappa > 1");
  }
  return r;
}

// One new apex vertex per boundary edge of a validated special triangulation,
// joined to that edge's endpoints.  Records r = number of original boundary
// edges.
inline DiskTriangulation extend_extra_special(const DiskTriangulation& d) {
  ValidationReport v = validate(d);
  if (!v.pass)
    throw std::invalid_argument("extend_extra_special: input does not validate: " + v.failures[0]);

  std::vector<std::string> names = d.graph.vertex_names();
  std::set<std::string> used(names.begin(), names.end());
  auto fresh_name = [&](int hint) {
    int k = hint;
    std::string cand = "v" + std::to_string(k);
    while (used.count(cand)) cand = "v" + std::to_string(++k);
    used.insert(cand);
    return cand;
  };

  std::vector<std::pair<int, int>> edge_list = d.graph.edges();
  std::vector<std::array<int, 3>> triangles = d.triangles;
  const int L = static_cast<int>(d.boundary.size());
  std::vector<int> new_boundary;
  BuildLog log = d.log;
  log.extended = true;
  for (int i = 0; i < L; ++i) {
    int u = d.boundary[static_cast<size_t>(i)];
    int v = d.boundary[static_cast<size_t>((i + 1) % L)];
    int w = static_cast<int>(names.size());
    names.push_back(fresh_name(w + 1));
    edge_list.emplace_back(std::min(u, w), std::max(u, w));
    edge_list.emplace_back(std::min(v, w), std::max(v, w));
    std::array<int, 3> t{u, v, w};
    std::sort(t.begin(), t.end());
    triangles.push_back(t);
    new_boundary.push_back(u);
    new_boundary.push_back(w);
  }
  std::sort(triangles.begin(), triangles.end());

  DiskTriangulation out;
  out.graph = Graph(names, edge_list);
  out.triangles = std::move(triangles);
  out.boundary = std::move(new_boundary);
  out.log = std::move(log);
  out.extra_special = true;
  out.r_original_boundary = L;
  out.original_boundary_edges = d.boundary_edges();
  return out;
}

// ---------------------------------------------------------------------------
// Recognition from a bare graph (used by the certificate pipelines, whose
// witnesses must be recomputable from the graph alone).

// Attempt to exhibit the graph as the 1-skeleton of a special triangulation:
// peel degree-2 vertices with adjacent neighbors down to a triangle, then
// replay the peeling forward through the builder (which enforces boundary
// attachment) and validate.  The returned triangulation uses the input graph
// itself, preserving its vertex order.
inline std::optional<DiskTriangulation> recognize_special(const Graph& g) {
  if (g.n() < 3 || 2 * g.n() - g.m() != 3) return std::nullopt;

  std::vector<bool> alive(static_cast<size_t>(g.n()), true);
  auto live_degree = [&](int v) {
    int d = 0;
    for (int u : g.neighbors(v))
      if (alive[static_cast<size_t>(u)]) ++d;
    return d;
  };
  std::vector<BuildStep> peeled;  // reverse order
  int remaining = g.n();
  while (remaining > 3) {
    int found = -1;
    std::pair<int, int> base{-1, -1};
    for (int v = 0; v < g.n() && found < 0; ++v) {
      if (!alive[static_cast<size_t>(v)] || live_degree(v) != 2) continue;
      std::vector<int> nb;
      for (int u : g.neighbors(v))
        if (alive[static_cast<size_t>(u)]) nb.push_back(u);
      if (g.adjacent(nb[0], nb[1])) {
        found = v;
        base = {nb[0], nb[1]};
      }
    }
    if (found < 0) return std::nullopt;
    BuildStep s;
    s.edge_u = g.vertex_name(base.first);
    s.edge_v = g.vertex_name(base.second);
    s.vertex = g.vertex_name(found);
    peeled.push_back(std::move(s));
    alive[static_cast<size_t>(found)] = false;
    --remaining;
  }
  std::vector<int> core;
  for (int v = 0; v < g.n(); ++v)
    if (alive[static_cast<size_t>(v)]) core.push_back(v);
  if (!(g.adjacent(core[0], core[1]) && g.adjacent(core[0], core[2]) &&
        g.adjacent(core[1], core[2])))
    return std::nullopt;

  SpecialBuildScript script;
  script.start = {g.vertex_name(core[0]), g.vertex_name(core[1]), g.vertex_name(core[2])};
  script.steps.assign(peeled.rbegin(), peeled.rend());
  DiskTriangulation rebuilt;
  try {
    rebuilt = build_special(script);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }

  // transfer onto the input graph, preserving its vertex order
  DiskTriangulation out;
  out.graph = g;
  std::vector<std::vector<int>> cl3 = cliques_of_size(g, 3);
  for (const auto& t : cl3) out.triangles.push_back({t[0], t[1], t[2]});
  for (int b : rebuilt.boundary) out.boundary.push_back(g.vertex_index(rebuilt.graph.vertex_name(b)));
  out.log = rebuilt.log;

  // rebuilt graph must be the same labelled graph
  std::set<std::pair<std::string, std::string>> in_edges, re_edges;
  for (auto [u, v] : g.edges()) in_edges.insert({g.vertex_name(u), g.vertex_name(v)});
  for (auto [u, v] : rebuilt.graph.edges())
    re_edges.insert({rebuilt.graph.vertex_name(u), rebuilt.graph.vertex_name(v)});
  auto norm = [](std::set<std::pair<std::string, std::string>>& s) {
    std::set<std::pair<std::string, std::string>> t;
    for (auto [a, b] : s) t.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
    s = t;
  };
  norm(in_edges);
  norm(re_edges);
  if (in_edges != re_edges) return std::nullopt;

  ValidationReport rep = validate(out);
  if (!rep.pass) return std::nullopt;
  return out;
}

// Attempt to exhibit the graph as the 1-skeleton of an extra-special
// triangulation.  In such a skeleton the degree-2 vertices are exactly the
// apexes: every original boundary vertex gained two apex neighbors.
inline std::optional<DiskTriangulation> recognize_extra_special(const Graph& g) {
  std::vector<int> apexes;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 2) apexes.push_back(v);
  const int r = static_cast<int>(apexes.size());
  if (r < 3) return std::nullopt;

  std::vector<bool> is_apex(static_cast<size_t>(g.n()), false);
  for (int a : apexes) is_apex[static_cast<size_t>(a)] = true;

  std::set<std::pair<int, int>> attached;
  std::map<std::pair<int, int>, int> apex_for_edge;
  for (int a : apexes) {
    const auto& nb = g.neighbors(a);
    int u = nb[0], v = nb[1];
    if (is_apex[static_cast<size_t>(u)] || is_apex[static_cast<size_t>(v)]) return std::nullopt;
    if (!g.adjacent(u, v)) return std::nullopt;
    auto e = std::make_pair(u, v);
    if (attached.count(e)) return std::nullopt;  // two apexes on one edge
    attached.insert(e);
    apex_for_edge[e] = a;
  }

  VertexSet core_set = VertexSet::full(g.n());
  for (int a : apexes) core_set.remove(a);
  Graph core = induced_subgraph(g, core_set);
  std::optional<DiskTriangulation> core_tri = recognize_special(core);
  if (!core_tri) return std::nullopt;

  // boundary edges of the core (global indices) must be exactly the attached edges
  std::vector<int> core_to_global = core_set.vertices();
  std::vector<std::pair<int, int>> core_boundary_global;
  for (auto [u, v] : core_tri->boundary_edges()) {
    int gu = core_to_global[static_cast<size_t>(u)], gv = core_to_global[static_cast<size_t>(v)];
    core_boundary_global.emplace_back(std::min(gu, gv), std::max(gu, gv));
  }
  std::set<std::pair<int, int>> core_boundary_set(core_boundary_global.begin(),
                                                  core_boundary_global.end());
  if (core_boundary_set != attached) return std::nullopt;
  if (static_cast<int>(core_boundary_set.size()) != r) return std::nullopt;

  DiskTriangulation out;
  out.graph = g;
  for (const auto& t : cliques_of_size(g, 3)) out.triangles.push_back({t[0], t[1], t[2]});
  const int L = static_cast<int>(core_tri->boundary.size());
  for (int i = 0; i < L; ++i) {
    int u = core_to_global[static_cast<size_t>(core_tri->boundary[static_cast<size_t>(i)])];
    int v = core_to_global[static_cast<size_t>(core_tri->boundary[static_cast<size_t>((i + 1) % L)])];
    auto e = std::make_pair(std::min(u, v), std::max(u, v));
    out.boundary.push_back(u);
    out.boundary.push_back(apex_for_edge.at(e));
  }
  out.log = core_tri->log;
  out.log.extended = true;
  out.extra_special = true;
  out.r_original_boundary = r;
  out.original_boundary_edges = core_boundary_global;

  ValidationReport rep = validate(out);
  if (!rep.pass) return std::nullopt;
  return out;
}

}  // namespace ggi
