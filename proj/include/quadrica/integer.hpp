#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace quadrica {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient C(n, k), exact. Returns 0 when k < 0 or k > n;
/// rejects negative n. Computed by the multiplicative formula with an
/// exact division at every step, so no factorial tables are involved.
inline Integer binom(const Integer& n, const Integer& k) {
  if (n < 0) throw std::invalid_argument("binom: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  Integer m = k;
  if (n - k < m) m = n - k;
  if (!m.fits_ulong_p()) throw std::overflow_error("binom: k out of range");
  const unsigned long mm = m.get_ui();
  Integer result = 1;
  Integer top = n - m;
  for (unsigned long i = 1; i <= mm; ++i) {
    ++top;  // n - m + i
    result *= top;
    // exact: the partial product is i! * C(n-m+i, i)
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i);
  }
  return result;
}

struct SqrtResult {
  Integer root;  // floor square root
  bool exact;
};

/// Floor integer square root with an exactness flag (remainder == 0).
inline SqrtResult integer_sqrt(const Integer& n) {
  if (n < 0) throw std::invalid_argument("integer_sqrt: negative input");
  SqrtResult r;
  Integer rem;
  mpz_sqrtrem(r.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  r.exact = (rem == 0);
  return r;
}

/// Inverts T = C(d, 2): the unique d >= 1 with d(d-1)/2 = T, if T is
/// triangular; empty otherwise. Uses the exact square root of 1 + 8T.
inline std::optional<Integer> triangular_inverse(const Integer& t) {
  if (t < 0) throw std::invalid_argument("triangular_inverse: negative input");
  const SqrtResult s = integer_sqrt(8 * t + 1);
  if (!s.exact) return std::nullopt;
  return Integer((s.root + 1) / 2);
}

/// Largest d with C(d, 2) <= t.
inline Integer triangular_floor(const Integer& t) {
  if (t < 0) throw std::invalid_argument("triangular_floor: negative input");
  const SqrtResult s = integer_sqrt(8 * t + 1);
  return Integer((s.root + 1) / 2);
}

/// Chu-Vandermonde convolution check:
/// sum_{j=0}^{min(a,b)} C(m, b-j) C(a, j) == C(m+a, b).
inline bool vandermonde_check(const Integer& m, const Integer& a, const Integer& b) {
  if (m < 0 || a < 0 || b < 0)
    throw std::invalid_argument("vandermonde_check: arguments must be nonnegative");
  const Integer jmax = a < b ? a : b;
  Integer sum = 0;
  for (Integer j = 0; j <= jmax; ++j) sum += binom(m, b - j) * binom(a, j);
  return sum == binom(m + a, b);
}

inline Integer parse_integer(const std::string& s) {
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0)
    throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

/// Parses "a" or "a/b" into a reduced rational with positive denominator.
inline Rational parse_rational(const std::string& s) {
  Rational v;
  if (s.empty() || v.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational: '" + s + "'");
  if (v.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  v.canonicalize();
  return v;
}

}  // namespace quadrica
