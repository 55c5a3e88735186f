#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace ggi {

// Exact arithmetic everywhere: no floating point is used anywhere in the
// library.  Int is an arbitrary-precision integer, Rat an exact rational.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when an algebraic identity that must hold produces an impossible
// value (e.g. a negative graded rank).  Signals a bug or invalid input,
// never clamped.
struct identity_violation : std::runtime_error {
  explicit identity_violation(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an operation requires a hypothesis (simple connectivity,
// connectedness, ...) that is not satisfied and not overridden.
struct gate_refused : std::runtime_error {
  explicit gate_refused(const std::string& what) : std::runtime_error(what) {}
};

// Binomial coefficient C(n, k) for arbitrary-precision n and small k >= 0.
inline Int binomial(const Int& n, long k) {
  if (k < 0) return Int(0);
  Int num = 1;
  Int den = 1;
  for (long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;  // exact: k! divides any product of k consecutive integers
}

inline Int binomial(long n, long k) { return binomial(Int(n), k); }

inline Int ipow(const Int& base, unsigned long e) {
  Int r = 1;
  Int b = base;
  while (e > 0) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

// Moebius function, by trial division.
inline int mobius(long n) {
  if (n <= 0) throw std::invalid_argument("mobius: n must be positive");
  int primes = 0;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++primes;
    }
  }
  if (n > 1) ++primes;
  return (primes % 2 == 0) ? 1 : -1;
}

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace ggi
