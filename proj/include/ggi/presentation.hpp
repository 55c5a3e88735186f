#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ggi/flag_complex.hpp"
#include "ggi/graph.hpp"
#include "ggi/linalg.hpp"

namespace ggi {

// A word in a free group: sequence of signed 1-based generator references,
// +g for the generator, -g for its inverse.
using Word = std::vector<int>;

inline Word free_reduce(const Word& w) {
  Word out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

inline Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline Word commutator_word(const Word& a, const Word& b) {
  return free_reduce(concat(concat(a, b), concat(inverse_word(a), inverse_word(b))));
}

// Relator: the flat word plus, when it has one, the commutator structure
// [left, right].  Tests need the structure; Fox calculus needs the word.
struct Relator {
  Word word;
  std::optional<std::array<Word, 2>> commutator;

  bool is_commutator_shaped() const { return commutator.has_value(); }
};

// Directed triangle of a 3-clique u < v < w: e = {u,v}, f = {v,w}, g = {u,w}.
struct DirectedTriangle {
  std::pair<int, int> e, f, g;
  std::array<int, 3> vertices;  // u < v < w
};

inline std::vector<DirectedTriangle> directed_triangles(const Graph& g) {
  std::vector<DirectedTriangle> out;
  for (const auto& t : cliques_of_size(g, 3)) {
    DirectedTriangle d;
    d.vertices = {t[0], t[1], t[2]};
    d.e = {t[0], t[1]};
    d.f = {t[1], t[2]};
    d.g = {t[0], t[2]};
    out.push_back(d);
  }
  return out;
}

// Finite group presentation.  Generators carry their image in the ambient
// vertex basis: a vertex generator v maps to v, an edge generator {u,v}
// (u < v) maps to u v^{-1} under the kernel inclusion.
struct GroupPresentation {
  enum class Kind { raag, dicks_leary, tree_reduced };

  Kind kind = Kind::raag;
  int n_vertices = 0;
  std::vector<std::string> generators;
  // abelianized image of generator i: (a, -1) meaning vertex a, or (a, b)
  // meaning a - b (the edge generator a b^{-1})
  std::vector<std::pair<int, int>> generator_image;
  std::vector<Relator> relators;

  int n_generators() const { return static_cast<int>(generators.size()); }
  int n_relators() const { return static_cast<int>(relators.size()); }
};

inline std::string edge_generator_name(const Graph& g, std::pair<int, int> e) {
  return g.vertex_name(e.first) + "-" + g.vertex_name(e.second);
}

// One generator per vertex, one commutator relator per edge.
inline GroupPresentation raag_presentation(const Graph& g) {
  GroupPresentation p;
  p.kind = GroupPresentation::Kind::raag;
  p.n_vertices = g.n();
  for (int v = 0; v < g.n(); ++v) {
    p.generators.push_back(g.vertex_name(v));
    p.generator_image.emplace_back(v, -1);
  }
  for (auto [u, v] : g.edges()) {
    Relator r;
    Word a{u + 1}, b{v + 1};
    r.word = commutator_word(a, b);
    r.commutator = std::array<Word, 2>{a, b};
    p.relators.push_back(std::move(r));
  }
  return p;
}

namespace detail {
inline void require_simply_connected(const Graph& g, bool override_gate, const char* who) {
  if (override_gate) return;
  SimplyConnectedStatus st = simply_connected_status(g);
  if (!st.yes())
    throw gate_refused(std::string(who) +
                       ": requires a simply-connected flag complex (status: " + st.text() +
                       ", " + st.reason + "); pass the explicit override to proceed");
}
}  // namespace detail

// Dicks-Leary presentation of the kernel group: one generator per edge; for
// each directed triangle (e, f, g) the relators [e, f] and e f g^{-1}.
// Generator {u,v} maps to u v^{-1} in the ambient right-angled Artin group.
inline GroupPresentation dicks_leary_presentation(const Graph& g, bool override_gate = false) {
  detail::require_simply_connected(g, override_gate, "dicks_leary_presentation");
  GroupPresentation p;
  p.kind = GroupPresentation::Kind::dicks_leary;
  p.n_vertices = g.n();
  std::map<std::pair<int, int>, int> edge_index;
  for (auto e : g.edges()) {
    edge_index[e] = static_cast<int>(p.generators.size());
    p.generators.push_back(edge_generator_name(g, e));
    p.generator_image.push_back(e);
  }
  for (const DirectedTriangle& t : directed_triangles(g)) {
    int e = edge_index.at(t.e) + 1, f = edge_index.at(t.f) + 1, gg = edge_index.at(t.g) + 1;
    Relator comm;
    comm.word = commutator_word({e}, {f});
    comm.commutator = std::array<Word, 2>{Word{e}, Word{f}};
    p.relators.push_back(std::move(comm));
    Relator prod;
    prod.word = free_reduce({e, f, -gg});
    p.relators.push_back(std::move(prod));
  }
  return p;
}

namespace detail {
// Signed tree-path word for a non-tree edge {u, v}: the product of tree-edge
// generators along the u -> v path, a step from x to y contributing the
// generator of {x, y} with sign + when x < y.  Words are over global edge
// indices (1-based).
inline Word tree_path_word(const Graph& g, const std::vector<std::pair<int, int>>& tree,
                           const std::map<std::pair<int, int>, int>& edge_index, int u, int v) {
  const int n = g.n();
  std::vector<int> prev(static_cast<size_t>(n), -1);
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (auto [a, b] : tree) {
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  for (auto& x : adj) std::sort(x.begin(), x.end());
  std::vector<int> stack{u};
  seen[static_cast<size_t>(u)] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[static_cast<size_t>(x)])
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = true;
        prev[static_cast<size_t>(y)] = x;
        stack.push_back(y);
      }
  }
  if (!seen[static_cast<size_t>(v)])
    throw std::invalid_argument("spanning_tree_reduction: tree does not span the graph");
  std::vector<int> path{v};
  while (path.back() != u) path.push_back(prev[static_cast<size_t>(path.back())]);
  std::reverse(path.begin(), path.end());  // u ... v
  Word w;
  for (size_t i = 1; i < path.size(); ++i) {
    int x = path[i - 1], y = path[i];
    std::pair<int, int> e = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
    int gi = edge_index.at(e) + 1;
    w.push_back(x < y ? gi : -gi);
  }
  return w;
}
}  // namespace detail

// Commutator-relators presentation on the edges of a spanning tree.  Each
// non-tree generator is eliminated either through a triangle relator
// e f = g (consuming that relator) or, failing that, through its signed
// tree-path word.  Remaining relators are substituted and freely reduced.
inline GroupPresentation spanning_tree_reduction(const Graph& g,
                                                 const std::vector<std::pair<int, int>>& tree,
                                                 bool override_gate = false) {
  detail::require_simply_connected(g, override_gate, "spanning_tree_reduction");
  if (static_cast<int>(tree.size()) != g.n() - 1)
    throw std::invalid_argument("spanning_tree_reduction: a spanning tree has |V|-1 edges");
  std::map<std::pair<int, int>, int> edge_index;
  for (int i = 0; i < g.m(); ++i) edge_index[g.edges()[static_cast<size_t>(i)]] = i;
  std::vector<bool> in_tree(static_cast<size_t>(g.m()), false);
  {
    std::vector<int> uf(static_cast<size_t>(g.n()));
    for (int i = 0; i < g.n(); ++i) uf[static_cast<size_t>(i)] = i;
    std::function<int(int)> find = [&](int x) {
      while (uf[static_cast<size_t>(x)] != x) x = uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
      return x;
    };
    for (auto e : tree) {
      auto it = edge_index.find(e);
      if (it == edge_index.end())
        throw std::invalid_argument("spanning_tree_reduction: tree edge not in the graph");
      if (in_tree[static_cast<size_t>(it->second)])
        throw std::invalid_argument("spanning_tree_reduction: duplicate tree edge");
      in_tree[static_cast<size_t>(it->second)] = true;
      if (find(e.first) == find(e.second))
        throw std::invalid_argument("spanning_tree_reduction: tree edges contain a cycle");
      uf[static_cast<size_t>(find(e.first))] = find(e.second);
    }
  }

  // expressions over global edge generators; tree edges are ground
  std::vector<std::optional<Word>> expr(static_cast<size_t>(g.m()));
  auto known = [&](int ei) { return in_tree[static_cast<size_t>(ei)] || expr[static_cast<size_t>(ei)].has_value(); };

  std::vector<DirectedTriangle> triangles = directed_triangles(g);
  std::vector<bool> consumed(triangles.size(), false);

  // greedily use e f = g relators to express unknown edges
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t ti = 0; ti < triangles.size(); ++ti) {
      if (consumed[ti]) continue;
      int e = edge_index.at(triangles[ti].e);
      int f = edge_index.at(triangles[ti].f);
      int gg = edge_index.at(triangles[ti].g);
      int unknowns = !known(e) + !known(f) + !known(gg);
      if (unknowns != 1) continue;
      if (!known(gg))
        expr[static_cast<size_t>(gg)] = Word{e + 1, f + 1};  // g = e f
      else if (!known(e))
        expr[static_cast<size_t>(e)] = Word{gg + 1, -(f + 1)};  // e = g f^{-1}
      else
        expr[static_cast<size_t>(f)] = Word{-(e + 1), gg + 1};  // f = e^{-1} g
      consumed[ti] = true;
      progress = true;
    }
  }

  // leftovers: signed word along the tree path
  for (int ei = 0; ei < g.m(); ++ei) {
    if (known(ei)) continue;
    auto [u, v] = g.edges()[static_cast<size_t>(ei)];
    expr[static_cast<size_t>(ei)] = detail::tree_path_word(g, tree, edge_index, u, v);
  }

  // expand recursively down to tree edges
  std::vector<std::optional<Word>> expanded(static_cast<size_t>(g.m()));
  std::function<Word(int)> expand = [&](int ei) -> Word {
    if (in_tree[static_cast<size_t>(ei)]) return Word{ei + 1};
    if (expanded[static_cast<size_t>(ei)]) return *expanded[static_cast<size_t>(ei)];
    Word out;
    for (int letter : *expr[static_cast<size_t>(ei)]) {
      Word part = expand(std::abs(letter) - 1);
      if (letter < 0) part = inverse_word(part);
      out.insert(out.end(), part.begin(), part.end());
    }
    out = free_reduce(out);
    expanded[static_cast<size_t>(ei)] = out;
    return out;
  };

  // local generator numbering: tree edges in canonical edge order
  std::vector<int> local(static_cast<size_t>(g.m()), 0);
  GroupPresentation p;
  p.kind = GroupPresentation::Kind::tree_reduced;
  p.n_vertices = g.n();
  for (int ei = 0; ei < g.m(); ++ei)
    if (in_tree[static_cast<size_t>(ei)]) {
      local[static_cast<size_t>(ei)] = static_cast<int>(p.generators.size()) + 1;
      p.generators.push_back(edge_generator_name(g, g.edges()[static_cast<size_t>(ei)]));
      p.generator_image.push_back(g.edges()[static_cast<size_t>(ei)]);
    }
  auto relocalize = [&](const Word& w) {
    Word out;
    out.reserve(w.size());
    for (int letter : w) {
      int gi = local[static_cast<size_t>(std::abs(letter) - 1)];
      out.push_back(letter > 0 ? gi : -gi);
    }
    return out;
  };

  for (size_t ti = 0; ti < triangles.size(); ++ti) {
    int e = edge_index.at(triangles[ti].e);
    int f = edge_index.at(triangles[ti].f);
    int gg = edge_index.at(triangles[ti].g);
    Word we = relocalize(expand(e));
    Word wf = relocalize(expand(f));
    {
      Relator r;
      r.word = commutator_word(we, wf);
      if (!r.word.empty()) {
        r.commutator = std::array<Word, 2>{free_reduce(we), free_reduce(wf)};
        p.relators.push_back(std::move(r));
      }
    }
    if (!consumed[ti]) {
      Relator r;
      r.word = free_reduce(concat(concat(we, wf), inverse_word(relocalize(expand(gg)))));
      if (!r.word.empty()) p.relators.push_back(std::move(r));
    }
  }
  return p;
}

// Spanning tree by breadth-first search from the first vertex, following the
// fixed vertex order.
inline std::vector<std::pair<int, int>> default_spanning_tree(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("default_spanning_tree: graph is disconnected");
  std::vector<std::pair<int, int>> tree;
  if (g.n() == 0) return tree;
  std::vector<bool> seen(static_cast<size_t>(g.n()), false);
  std::vector<int> queue{0};
  seen[0] = true;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int u : g.neighbors(v))
      if (!seen[static_cast<size_t>(u)]) {
        seen[static_cast<size_t>(u)] = true;
        tree.push_back(v < u ? std::make_pair(v, u) : std::make_pair(u, v));
        queue.push_back(u);
      }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

// Abelianization from the Smith normal form of the relator exponent matrix.
struct Abelianization {
  int rank = 0;
  std::vector<Int> torsion;
};

inline IMatrix exponent_matrix(const GroupPresentation& p) {
  IMatrix m(p.n_relators(), p.n_generators());
  for (int i = 0; i < p.n_relators(); ++i)
    for (int letter : p.relators[static_cast<size_t>(i)].word)
      m.at(i, std::abs(letter) - 1) += letter > 0 ? 1 : -1;
  return m;
}

inline Abelianization abelianization(const GroupPresentation& p) {
  std::vector<Int> factors = smith_normal_form(exponent_matrix(p));
  Abelianization out;
  out.rank = p.n_generators() - static_cast<int>(factors.size());
  for (const Int& f : factors)
    if (f > 1) out.torsion.push_back(f);
  return out;
}

// Rank-one character: one nonzero exact rational per vertex.  A character of
// the kernel group has |V|-1 coordinates; it is stored through the lift with
// last coordinate 1 (the quotient-by-diagonal convention used everywhere).
struct Character {
  bool bb_target = false;
  std::vector<Rat> vertex_values;  // always |V| entries

  static Character for_raag(std::vector<Rat> values) {
    Character c;
    c.bb_target = false;
    c.vertex_values = std::move(values);
    c.check();
    return c;
  }
  static Character for_bb(std::vector<Rat> quotient_values) {
    Character c;
    c.bb_target = true;
    c.vertex_values = std::move(quotient_values);
    c.vertex_values.push_back(Rat(1));
    c.check();
    return c;
  }

  void check() const {
    for (const Rat& v : vertex_values)
      if (v == 0) throw std::invalid_argument("Character: coordinates must be nonzero");
  }

  int n_vertices() const { return static_cast<int>(vertex_values.size()); }
  const Rat& on_vertex(int v) const { return vertex_values.at(static_cast<size_t>(v)); }

  // value on a presentation generator
  Rat on_generator(const GroupPresentation& p, int gi) const {
    auto [a, b] = p.generator_image.at(static_cast<size_t>(gi));
    if (b < 0) return on_vertex(a);
    return on_vertex(a) / on_vertex(b);
  }

  bool trivial_on(const GroupPresentation& p) const {
    for (int i = 0; i < p.n_generators(); ++i)
      if (on_generator(p, i) != 1) return false;
    return true;
  }
};

// dim H^1(group, rho) for a nontrivial rank-one character, from the Fox
// Jacobian of the presentation evaluated at rho: with n generators,
// n - 1 - rank J.
inline int fox_h1_dimension(const GroupPresentation& p, const Character& rho) {
  if (rho.n_vertices() != p.n_vertices)
    throw std::invalid_argument("fox_h1_dimension: character/presentation vertex count mismatch");
  const int n = p.n_generators();
  std::vector<Rat> gen_value(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) gen_value[static_cast<size_t>(i)] = rho.on_generator(p, i);
  if (rho.trivial_on(p))
    throw std::invalid_argument("fox_h1_dimension: trivial character rejected (formula differs)");

  QMatrix jac(p.n_relators(), n);
  for (int ri = 0; ri < p.n_relators(); ++ri) {
    Rat prefix = 1;
    for (int letter : p.relators[static_cast<size_t>(ri)].word) {
      int gi = std::abs(letter) - 1;
      if (letter > 0) {
        jac.at(ri, gi) += prefix;
        prefix *= gen_value[static_cast<size_t>(gi)];
      } else {
        prefix /= gen_value[static_cast<size_t>(gi)];
        jac.at(ri, gi) -= prefix;
      }
    }
  }
  return n - 1 - rank(jac);
}

// Plain-text serialization: `gen a b c; rel a b A B;` with capitalization of
// the leading letter marking the inverse.  Generators are renamed to
// canonical lowercase tokens; a name map is emitted in comments.
inline std::string presentation_to_text(const GroupPresentation& p) {
  auto token = [](int index) {
    std::string t;
    int i = index;
    do {
      t.insert(t.begin(), static_cast<char>('a' + i % 26));
      i = i / 26 - 1;
    } while (i >= 0);
    return t;
  };
  std::ostringstream os;
  for (int i = 0; i < p.n_generators(); ++i)
    os << "# " << token(i) << " = " << p.generators[static_cast<size_t>(i)] << "\n";
  os << "gen";
  for (int i = 0; i < p.n_generators(); ++i) os << " " << token(i);
  os << ";\n";
  for (const Relator& r : p.relators) {
    os << "rel";
    for (int letter : r.word) {
      std::string t = token(std::abs(letter) - 1);
      if (letter < 0) t[0] = static_cast<char>(t[0] - 'a' + 'A');
      os << " " << t;
    }
    os << ";\n";
  }
  return os.str();
}

}  // namespace ggi
