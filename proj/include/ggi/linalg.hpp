#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ggi/numbers.hpp"

namespace ggi {

// Dense exact-rational matrix.  All elimination is exact; there is no
// floating point in any rank or nullspace computation.
struct QMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

inline QMatrix transpose(const QMatrix& m) {
  QMatrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

// [a | b] side by side; row counts must agree.
inline QMatrix hstack(const QMatrix& a, const QMatrix& b) {
  if (a.rows != b.rows) throw std::invalid_argument("hstack: row mismatch");
  QMatrix m(a.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols; ++j) m.at(i, a.cols + j) = b.at(i, j);
  }
  return m;
}

inline QMatrix vstack(const QMatrix& a, const QMatrix& b) {
  if (a.cols != b.cols) throw std::invalid_argument("vstack: column mismatch");
  QMatrix m(a.rows + b.rows, a.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < a.cols; ++j) m.at(a.rows + i, j) = b.at(i, j);
  return m;
}

// Gaussian elimination, first nonzero pivot in row order.  Destroys its copy.
inline int rank(QMatrix m) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv = m.at(r, c);
    for (int i = r + 1; i < m.rows; ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) / inv;
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

// Independently coded elimination with a different pivoting strategy
// (largest-magnitude pivot, columns processed right to left).  Used to
// cross-check ranks computed by rank().
inline int rank_pivot_alt(QMatrix m) {
  auto mag = [](const Rat& x) {
    Rat y = x < 0 ? Rat(-x) : x;
    return y;
  };
  int r = 0;
  for (int c = m.cols - 1; c >= 0 && r < m.rows; --c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0 && (p < 0 || mag(m.at(i, c)) > mag(m.at(p, c)))) p = i;
    if (p < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat piv = m.at(r, c);
    for (int i = r + 1; i < m.rows; ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) / piv;
      for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<int> rref(QMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat piv = m.at(r, c);
    for (int j = 0; j < m.cols; ++j) m.at(r, j) /= piv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Basis of the right kernel, one column per basis vector.
inline QMatrix nullspace(QMatrix m) {
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  int k = m.cols - static_cast<int>(pivots.size());
  QMatrix basis(m.cols, k);
  int col = 0;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    basis.at(free, col) = 1;
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      basis.at(pivots[pr], col) = -m.at(static_cast<int>(pr), free);
    ++col;
  }
  return basis;
}

// Is v in the column span of basis?
inline bool in_column_span(const QMatrix& basis, const QMatrix& v) {
  if (v.cols != 1 || v.rows != basis.rows) throw std::invalid_argument("in_column_span: shape");
  return rank(basis) == rank(hstack(basis, v));
}

// ---------------------------------------------------------------------------
// Integer matrices: boundary maps, exponent matrices, Smith normal form.

struct IMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IMatrix() = default;
  IMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool is_zero() const {
    for (const Int& x : a)
      if (x != 0) return false;
    return true;
  }
};

inline QMatrix to_rational(const IMatrix& m) {
  QMatrix q(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) q.at(i, j) = Rat(m.at(i, j));
  return q;
}

inline IMatrix imul(const IMatrix& a, const IMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("imul: shape mismatch");
  IMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

inline int rank_rational(const IMatrix& m) { return rank(to_rational(m)); }

// Rank over the prime field F_p.
inline int rank_mod_p(const IMatrix& m, long p) {
  if (!is_prime(p)) throw std::invalid_argument("rank_mod_p: modulus must be prime");
  std::vector<long> a(static_cast<size_t>(m.rows) * m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      Int v = m.at(i, j) % p;
      if (v < 0) v += p;
      a[static_cast<size_t>(i) * m.cols + j] = v.convert_to<long>();
    }
  auto at = [&](int i, int j) -> long& { return a[static_cast<size_t>(i) * m.cols + j]; };
  auto inv_mod = [&](long x) {
    long r = 1, b = x % p, e = p - 2;  // Fermat
    while (e > 0) {
      if (e & 1) r = (r * b) % p;
      b = (b * b) % p;
      e >>= 1;
    }
    return r;
  };
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(at(piv, j), at(r, j));
    long inv = inv_mod(at(r, c));
    for (int i = r + 1; i < m.rows; ++i) {
      if (at(i, c) == 0) continue;
      long f = (at(i, c) * inv) % p;
      for (int j = c; j < m.cols; ++j) at(i, j) = ((at(i, j) - f * at(r, j)) % p + p) % p;
    }
    ++r;
  }
  return r;
}

// Smith normal form; returns the nonzero invariant factors d_1 | d_2 | ...
inline std::vector<Int> smith_normal_form(IMatrix m) {
  auto abs_int = [](const Int& x) { return x < 0 ? Int(-x) : x; };
  std::vector<Int> factors;
  int R = m.rows, C = m.cols;
  for (int k = 0; k < std::min(R, C); ++k) {
    for (;;) {
      // smallest nonzero entry of the trailing submatrix -> pivot
      int pi = -1, pj = -1;
      for (int i = k; i < R; ++i)
        for (int j = k; j < C; ++j)
          if (m.at(i, j) != 0 &&
              (pi < 0 || abs_int(m.at(i, j)) < abs_int(m.at(pi, pj))))
            pi = i, pj = j;
      if (pi < 0) {
        std::vector<Int> out;
        for (const Int& f : factors)
          if (f != 0) out.push_back(f);
        return out;
      }
      if (pi != k)
        for (int j = 0; j < C; ++j) std::swap(m.at(pi, j), m.at(k, j));
      if (pj != k)
        for (int i = 0; i < R; ++i) std::swap(m.at(i, pj), m.at(i, k));

      bool clean = true;
      for (int i = k + 1; i < R; ++i) {
        if (m.at(i, k) == 0) continue;
        Int q = m.at(i, k) / m.at(k, k);
        for (int j = k; j < C; ++j) m.at(i, j) -= q * m.at(k, j);
        if (m.at(i, k) != 0) clean = false;
      }
      for (int j = k + 1; j < C; ++j) {
        if (m.at(k, j) == 0) continue;
        Int q = m.at(k, j) / m.at(k, k);
        for (int i = k; i < R; ++i) m.at(i, j) -= q * m.at(i, k);
        if (m.at(k, j) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the rest of the submatrix
      bool divides = true;
      for (int i = k + 1; i < R && divides; ++i)
        for (int j = k + 1; j < C && divides; ++j)
          if (m.at(i, j) % m.at(k, k) != 0) {
            for (int jj = k; jj < C; ++jj) m.at(k, jj) += m.at(i, jj);
            divides = false;
          }
      if (!divides) continue;
      factors.push_back(abs_int(m.at(k, k)));
      break;
    }
  }
  std::vector<Int> out;
  for (const Int& f : factors)
    if (f != 0) out.push_back(f);
  return out;
}

}  // namespace ggi
