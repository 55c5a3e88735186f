#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "ggi/graph.hpp"
#include "ggi/numbers.hpp"

namespace ggi {

// Polynomial with arbitrary-precision integer coefficients, index = degree.
// No trailing zeros beyond the declared degree.
struct IntPolynomial {
  std::vector<Int> c;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for the zero polynomial
  Int coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c.size())) ? c[static_cast<size_t>(k)] : Int(0);
  }
  bool is_zero() const { return c.empty(); }

  IntPolynomial operator+(const IntPolynomial& o) const {
    std::vector<Int> r(std::max(c.size(), o.c.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
    return IntPolynomial(std::move(r));
  }
  IntPolynomial operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<Int> r(c.size() + o.c.size() - 1, Int(0));
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    return IntPolynomial(std::move(r));
  }

  // p(-t)
  IntPolynomial alternate() const {
    std::vector<Int> r = c;
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return IntPolynomial(std::move(r));
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      Int a = c[i];
      if (first) {
        if (a < 0) os << "-", a = -a;
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      if (i == 0)
        os << a;
      else {
        if (a != 1) os << a << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    return os.str();
  }
};

// Truncated power series with exact rational coefficients.  The truncation
// order N is exclusive: coefficients of t^0 .. t^{N-1} are meaningful.
// Binary operations carry the minimum order of the operands.
struct PowerSeries {
  std::vector<Rat> c;
  int order = 0;

  PowerSeries() = default;
  PowerSeries(std::vector<Rat> coeffs, int n) : c(std::move(coeffs)), order(n) { resize(); }

  static PowerSeries from_polynomial(const IntPolynomial& p, int n) {
    std::vector<Rat> r(static_cast<size_t>(n), Rat(0));
    for (int i = 0; i < n && i < static_cast<int>(p.c.size()); ++i)
      r[static_cast<size_t>(i)] = Rat(p.c[static_cast<size_t>(i)]);
    return PowerSeries(std::move(r), n);
  }
  static PowerSeries zero(int n) { return PowerSeries(std::vector<Rat>(static_cast<size_t>(n)), n); }
  static PowerSeries one(int n) {
    PowerSeries s = zero(n);
    if (n > 0) s.c[0] = 1;
    return s;
  }

  void resize() { c.resize(static_cast<size_t>(order), Rat(0)); }
  Rat coeff(int k) const {
    return (k >= 0 && k < order) ? c[static_cast<size_t>(k)] : Rat(0);
  }

  PowerSeries operator+(const PowerSeries& o) const {
    int n = std::min(order, o.order);
    std::vector<Rat> r(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) r[static_cast<size_t>(i)] = coeff(i) + o.coeff(i);
    return PowerSeries(std::move(r), n);
  }
  PowerSeries operator-(const PowerSeries& o) const {
    int n = std::min(order, o.order);
    std::vector<Rat> r(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) r[static_cast<size_t>(i)] = coeff(i) - o.coeff(i);
    return PowerSeries(std::move(r), n);
  }
  PowerSeries operator*(const PowerSeries& o) const {
    int n = std::min(order, o.order);
    std::vector<Rat> r(static_cast<size_t>(n), Rat(0));
    for (int i = 0; i < n; ++i) {
      if (coeff(i) == 0) continue;
      for (int j = 0; i + j < n; ++j) r[static_cast<size_t>(i + j)] += coeff(i) * o.coeff(j);
    }
    return PowerSeries(std::move(r), n);
  }

  // Division by a series with invertible constant term.
  PowerSeries div_unit(const PowerSeries& d) const {
    int n = std::min(order, d.order);
    if (n == 0) return zero(0);
    if (d.coeff(0) == 0) throw std::invalid_argument("div_unit: divisor has zero constant term");
    std::vector<Rat> q(static_cast<size_t>(n), Rat(0));
    for (int k = 0; k < n; ++k) {
      Rat acc = coeff(k);
      for (int j = 1; j <= k; ++j) acc -= d.coeff(j) * q[static_cast<size_t>(k - j)];
      q[static_cast<size_t>(k)] = acc / d.coeff(0);
    }
    return PowerSeries(std::move(q), n);
  }

  // Substitute t -> t/(1-t).  The image of t^j is t^j * (1-t)^{-j}, computed
  // by iterated multiplication with 1/(1-t) = 1 + t + t^2 + ...
  PowerSeries substitute_t_over_one_minus_t() const {
    PowerSeries geom = zero(order);
    for (int i = 0; i < order; ++i) geom.c[static_cast<size_t>(i)] = 1;
    PowerSeries result = zero(order);
    PowerSeries power = one(order);  // (t/(1-t))^j
    PowerSeries step = zero(order);  // t/(1-t)
    for (int i = 1; i < order; ++i) step.c[static_cast<size_t>(i)] = 1;
    for (int j = 0; j < order; ++j) {
      if (coeff(j) != 0) {
        for (int i = 0; i < order; ++i)
          result.c[static_cast<size_t>(i)] += coeff(j) * power.coeff(i);
      }
      power = power * step;
    }
    return result;
  }
};

// Vector of graded ranks phi_1..phi_N or theta_1..theta_N.
struct RankVector {
  enum class Group { raag, bb };
  enum class Kind { lcs, chen };

  Group group = Group::raag;
  Kind kind = Kind::lcs;
  std::vector<Int> values;  // values[k-1] = rank in degree k
  bool truncated_input = false;  // propagated from capped cut coefficients

  Int rank(int k) const {
    if (k < 1 || k > static_cast<int>(values.size()))
      throw std::out_of_range("RankVector::rank: degree out of range");
    return values[static_cast<size_t>(k) - 1];
  }
  int order() const { return static_cast<int>(values.size()); }
};

// Clique polynomial P(t) = sum f_k t^k.
inline IntPolynomial clique_polynomial(const Graph& g) { return IntPolynomial(clique_counts(g)); }

// Cut polynomial Q(t) = sum_{j>=2} c_j t^j.
inline IntPolynomial cut_polynomial(const CutCoefficients& cc) { return IntPolynomial(cc.c); }

inline IntPolynomial cut_polynomial(const Graph& g) { return cut_polynomial(cut_coefficients(g)); }

namespace detail {
// Multiply the integer series f (coefficients 0..n-1) in place by
// (1 - t^k)^{-phi} = sum_i C(phi+i-1, i) t^{k i}.
inline void mul_inverse_factor(std::vector<Int>& f, int k, const Int& phi) {
  if (phi == 0) return;
  const int n = static_cast<int>(f.size());
  std::vector<Int> out(f.size(), Int(0));
  for (int i = 0; k * i < n; ++i) {
    Int b = binomial(phi + i - 1, i);
    if (b == 0) continue;
    for (int j = 0; j + k * i < n; ++j) out[static_cast<size_t>(j + k * i)] += b * f[static_cast<size_t>(j)];
  }
  f = std::move(out);
}

// Multiply f in place by (1 - t^k)^{phi} (phi >= 0 a machine-size exponent).
inline void mul_factor(std::vector<Int>& f, int k, const Int& phi) {
  const int n = static_cast<int>(f.size());
  std::vector<Int> out(f.size(), Int(0));
  int sign = 1;
  for (int i = 0; k * i < n; ++i) {
    Int b = binomial(phi, i) * sign;
    sign = -sign;
    if (b == 0) continue;
    for (int j = 0; j + k * i < n; ++j) out[static_cast<size_t>(j + k * i)] += b * f[static_cast<size_t>(j)];
  }
  f = std::move(out);
}
}  // namespace detail

// Extract the exponents phi_k from the identity
//     prod_{k>=1} (1-t^k)^{phi_k} = f(t),
// by residual division: phi_k = -[t^k] g, then g <- g * (1-t^k)^{-phi_k}.
// Stays in integer arithmetic and reports the degree at which the identity
// breaks, if it does.
inline std::vector<Int> extract_exponents(const std::vector<Int>& f_coeffs, int n_terms) {
  std::vector<Int> g(f_coeffs);
  g.resize(static_cast<size_t>(n_terms) + 1, Int(0));
  if (g[0] != 1)
    throw identity_violation("rank extraction: series must have constant term 1");
  std::vector<Int> phi;
  phi.reserve(static_cast<size_t>(n_terms));
  for (int k = 1; k <= n_terms; ++k) {
    Int pk = -g[static_cast<size_t>(k)];
    if (pk < 0)
      throw identity_violation("rank extraction: negative rank in degree " + std::to_string(k));
    detail::mul_inverse_factor(g, k, pk);
    for (int j = 1; j <= k; ++j)
      if (g[static_cast<size_t>(j)] != 0)
        throw identity_violation("rank extraction: residual not cleared in degree " +
                                 std::to_string(j));
    phi.push_back(pk);
  }
  return phi;
}

// Rebuild prod (1-t^k)^{phi_k} up to t^n_terms; test helper for the
// round-trip invariant.
inline std::vector<Int> rebuild_product(const std::vector<Int>& phi, int n_terms) {
  std::vector<Int> f(static_cast<size_t>(n_terms) + 1, Int(0));
  f[0] = 1;
  for (int k = 1; k <= static_cast<int>(phi.size()) && k <= n_terms; ++k)
    detail::mul_factor(f, k, phi[static_cast<size_t>(k) - 1]);
  return f;
}

// LCS ranks from the clique polynomial:
//   raag:  prod (1-t^k)^{phi_k} = P(-t)
//   bb:    prod (1-t^k)^{phi_k} = P(-t)/(1-t)   (connected graph)
inline RankVector lcs_ranks(const IntPolynomial& clique_poly, RankVector::Group group,
                            int n_terms) {
  IntPolynomial p = clique_poly.alternate();  // P(-t)
  std::vector<Int> f(static_cast<size_t>(n_terms) + 1, Int(0));
  if (group == RankVector::Group::bb) {
    // divide by (1-t): coefficientwise prefix sums
    Int acc = 0;
    for (int i = 0; i <= n_terms; ++i) {
      acc += p.coeff(i);
      f[static_cast<size_t>(i)] = acc;
    }
  } else {
    for (int i = 0; i <= n_terms; ++i) f[static_cast<size_t>(i)] = p.coeff(i);
  }
  RankVector out;
  out.group = group;
  out.kind = RankVector::Kind::lcs;
  out.values = extract_exponents(f, n_terms);
  return out;
}

inline RankVector lcs_ranks(const Graph& g, RankVector::Group group, int n_terms) {
  if (group == RankVector::Group::bb && !is_connected(g))
    throw gate_refused("lcs_ranks: the kernel-group identity requires a connected graph");
  return lcs_ranks(clique_polynomial(g), group, n_terms);
}

// Chen ranks from the cut coefficients:
//   theta_1 = |V| - 1 (bb) or |V| (raag);
//   theta_k = sum_j c_j * C(k-1, j-1) for k >= 2, the closed form of the
//   substitution t -> t/(1-t) applied to the cut polynomial.
inline RankVector chen_ranks(const CutCoefficients& cc, RankVector::Group group, int n_terms) {
  RankVector out;
  out.group = group;
  out.kind = RankVector::Kind::chen;
  out.truncated_input = cc.truncated;
  out.values.assign(static_cast<size_t>(n_terms), Int(0));
  if (n_terms >= 1)
    out.values[0] = group == RankVector::Group::bb ? Int(cc.n_vertices - 1) : Int(cc.n_vertices);
  for (int k = 2; k <= n_terms; ++k) {
    Int acc = 0;
    for (int j = 2; j < static_cast<int>(cc.c.size()); ++j)
      if (cc.c[static_cast<size_t>(j)] != 0)
        acc += cc.c[static_cast<size_t>(j)] * binomial(k - 1, j - 1);
    out.values[static_cast<size_t>(k) - 1] = acc;
  }
  return out;
}

inline RankVector chen_ranks(const Graph& g, RankVector::Group group, int n_terms) {
  if (group == RankVector::Group::bb && !is_connected(g))
    throw gate_refused("chen_ranks: the kernel-group identity requires a connected graph");
  return chen_ranks(cut_coefficients(g), group, n_terms);
}

// Direct series route for the Chen identity, used to cross-validate the
// closed form: coefficients of Q(t/(1-t)) in degrees 2..n_terms.
inline std::vector<Int> chen_ranks_via_series(const IntPolynomial& cut_poly, int n_terms) {
  PowerSeries q = PowerSeries::from_polynomial(cut_poly, n_terms + 1);
  PowerSeries s = q.substitute_t_over_one_minus_t();
  std::vector<Int> out(static_cast<size_t>(n_terms), Int(0));
  for (int k = 2; k <= n_terms; ++k) {
    Rat v = s.coeff(k);
    if (boost::multiprecision::denominator(v) != 1)
      throw identity_violation("chen substitution produced a non-integer coefficient");
    out[static_cast<size_t>(k) - 1] = boost::multiprecision::numerator(v);
  }
  return out;
}

// Witt numbers: LCS ranks of the free group F_n,
//   phi_k = (1/k) sum_{d | k} mu(d) n^{k/d}.
// Independent oracle for every tree/free-group test.
inline RankVector witt_ranks(long n, int n_terms) {
  if (n < 1) throw std::invalid_argument("witt_ranks: rank must be >= 1");
  RankVector out;
  out.group = RankVector::Group::raag;
  out.kind = RankVector::Kind::lcs;
  for (int k = 1; k <= n_terms; ++k) {
    Int acc = 0;
    for (long d = 1; d <= k; ++d) {
      if (k % d != 0) continue;
      acc += Int(mobius(d)) * ipow(Int(n), static_cast<unsigned long>(k / d));
    }
    if (acc % k != 0) throw identity_violation("witt_ranks: non-integral value");
    out.values.push_back(acc / k);
  }
  return out;
}

}  // namespace ggi
