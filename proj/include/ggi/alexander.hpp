#pragma once

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ggi/graph.hpp"
#include "ggi/linalg.hpp"
#include "ggi/presentation.hpp"

namespace ggi {

// For a strictly sorted triple t = (a, b, c) and a pair e inside t, the
// opposite vertex v_e and the sign of the permutation (v_e, u, w) where
// e = {u, w}, u < w:
//   e = {b,c} -> (a, +1),  e = {a,c} -> (b, -1),  e = {a,b} -> (c, +1).
struct TripleSign {
  std::pair<int, int> pair;
  int opposite_vertex;
  int sign;
};

inline std::array<TripleSign, 3> triple_signs(int a, int b, int c) {
  if (!(a < b && b < c)) throw std::invalid_argument("triple_signs: triple must be strictly sorted");
  return {TripleSign{{b, c}, a, +1}, TripleSign{{a, c}, b, -1}, TripleSign{{a, b}, c, +1}};
}

// Presentation matrix of an Alexander-type invariant of the right-angled
// Artin group.  Columns are indexed by the non-edges, rows by the vertex
// triples that are not 3-cliques.  In the Laurent form an entry is
// sign * (x_v - 1) over Z[V^{+-1}]; in the linear form it is sign * x_v over
// Z[V].  Each row has at most 3 nonzero entries.
struct AlexanderMatrix {
  bool laurent = true;
  int n_vertices = 0;
  std::vector<std::array<int, 3>> rows;       // non-3-clique triples, sorted
  std::vector<std::pair<int, int>> columns;   // non-edges, canonical order

  struct Entry {
    int col;
    int vertex;
    int sign;
  };
  std::vector<std::vector<Entry>> entries;  // per row

  int n_rows() const { return static_cast<int>(rows.size()); }
  int n_cols() const { return static_cast<int>(columns.size()); }
};

namespace detail {
inline AlexanderMatrix alexander_matrix_impl(const Graph& g, bool laurent) {
  AlexanderMatrix m;
  m.laurent = laurent;
  m.n_vertices = g.n();
  m.columns = non_edges(g);
  std::map<std::pair<int, int>, int> col_index;
  for (int i = 0; i < m.n_cols(); ++i) col_index[m.columns[static_cast<size_t>(i)]] = i;

  for (int a = 0; a < g.n(); ++a)
    for (int b = a + 1; b < g.n(); ++b)
      for (int c = b + 1; c < g.n(); ++c) {
        if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c)) continue;  // 3-clique
        m.rows.push_back({a, b, c});
        std::vector<AlexanderMatrix::Entry> row;
        for (const TripleSign& ts : triple_signs(a, b, c)) {
          auto it = col_index.find(ts.pair);
          if (it == col_index.end()) continue;  // pair is an edge, contributes nothing
          row.push_back({it->second, ts.opposite_vertex, ts.sign});
        }
        m.entries.push_back(std::move(row));
      }
  return m;
}
}  // namespace detail

// Module presentation of the Alexander invariant over the Laurent ring.
inline AlexanderMatrix alexander_presentation(const Graph& g) {
  return detail::alexander_matrix_impl(g, true);
}

// The degree-one linearization over the polynomial ring.
inline AlexanderMatrix infinitesimal_presentation(const Graph& g) {
  return detail::alexander_matrix_impl(g, false);
}

// Evaluate the matrix at an exact rational point and decide support
// membership: the fiber of the module is nonzero iff rank < #columns.
// Laurent evaluation requires every coordinate nonzero.
inline QMatrix evaluate_matrix(const AlexanderMatrix& m, const std::vector<Rat>& point) {
  if (static_cast<int>(point.size()) != m.n_vertices)
    throw std::invalid_argument("evaluate_matrix: point has wrong length");
  if (m.laurent)
    for (const Rat& x : point)
      if (x == 0)
        throw std::invalid_argument("evaluate_matrix: zero coordinate in a Laurent evaluation");
  QMatrix q(m.n_rows(), m.n_cols());
  for (int i = 0; i < m.n_rows(); ++i)
    for (const auto& e : m.entries[static_cast<size_t>(i)]) {
      Rat v = point[static_cast<size_t>(e.vertex)];
      q.at(i, e.col) += Rat(e.sign) * (m.laurent ? Rat(v - 1) : v);
    }
  return q;
}

inline bool evaluate_in_support(const AlexanderMatrix& m, const std::vector<Rat>& point) {
  return rank(evaluate_matrix(m, point)) < m.n_cols();
}

inline bool evaluate_in_support(const AlexanderMatrix& m, const Character& rho) {
  return evaluate_in_support(m, rho.vertex_values);
}

// Plain-text sparse triple export: one `row col polynomial` line per entry.
inline std::string export_sparse_text(const AlexanderMatrix& m, const Graph& g) {
  std::ostringstream os;
  os << "# " << (m.laurent ? "laurent" : "linear") << " " << m.n_rows() << " x " << m.n_cols()
     << "\n";
  for (int i = 0; i < m.n_rows(); ++i)
    for (const auto& e : m.entries[static_cast<size_t>(i)]) {
      os << i << " " << e.col << " ";
      os << (e.sign > 0 ? "" : "-");
      if (m.laurent)
        os << "(" << g.vertex_name(e.vertex) << "-1)";
      else
        os << g.vertex_name(e.vertex);
      os << "\n";
    }
  return os.str();
}

}  // namespace ggi
