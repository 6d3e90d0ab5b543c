#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include <quadrica/integer.hpp>

namespace quadrica {

/// Integer polynomial in the hyperplane class h, truncated at degree k.
/// Products silently drop all terms of degree > k.
struct TruncatedClassPolynomial {
  std::vector<Integer> coeff;  // coeff[i] multiplies h^i; size is order+1

  int order() const { return static_cast<int>(coeff.size()) - 1; }

  static TruncatedClassPolynomial one(int k) {
    if (k < 0) throw std::invalid_argument("TruncatedClassPolynomial: order must be >= 0");
    TruncatedClassPolynomial p;
    p.coeff.assign(static_cast<std::size_t>(k) + 1, 0);
    p.coeff[0] = 1;
    return p;
  }

  /// 1 + c*h at the given truncation order.
  static TruncatedClassPolynomial linear(int k, const Integer& c) {
    TruncatedClassPolynomial p = one(k);
    if (k >= 1) p.coeff[1] = c;
    return p;
  }

  bool operator==(const TruncatedClassPolynomial&) const = default;
};

inline TruncatedClassPolynomial truncated_product(const TruncatedClassPolynomial& p,
                                                  const TruncatedClassPolynomial& q) {
  if (p.order() != q.order())
    throw std::invalid_argument("truncated_product: truncation orders differ");
  const int k = p.order();
  TruncatedClassPolynomial out;
  out.coeff.assign(static_cast<std::size_t>(k) + 1, 0);
  for (int i = 0; i <= k; ++i)
    for (int j = 0; i + j <= k; ++j) out.coeff[i + j] += p.coeff[i] * q.coeff[j];
  return out;
}

/// Multiplicative inverse modulo h^(k+1); the constant term must be 1.
inline TruncatedClassPolynomial truncated_inverse(const TruncatedClassPolynomial& p) {
  if (p.coeff.empty() || p.coeff[0] != 1)
    throw std::invalid_argument("truncated_inverse: constant term must be 1");
  const int k = p.order();
  TruncatedClassPolynomial q;
  q.coeff.assign(static_cast<std::size_t>(k) + 1, 0);
  q.coeff[0] = 1;
  for (int i = 1; i <= k; ++i) {
    Integer acc = 0;
    for (int j = 1; j <= i; ++j) acc += p.coeff[j] * q.coeff[i - j];
    q.coeff[i] = -acc;
  }
  return q;
}

/// Numeric avatar of a smooth projective variety: dimension k, degree,
/// and the integers H^(k-i) . s_i for the Segre classes s_i of the
/// tangent bundle (inverse total Chern class convention). Entry 0 is the
/// degree. The sectional genus, when present, is the genus of the
/// generic curve section.
struct VarietyNumerics {
  int dim = 0;
  Integer degree;
  std::vector<Integer> segre_numbers;  // length dim+1
  std::optional<Integer> sectional_genus;
};

/// Numeric data of a smooth complete intersection of hypersurfaces of
/// the given degrees in P^m. With k = m - s the total Segre class is
///
///   s(Y) = prod_j (1 + e_j h) / (1 + h)^(m+1)  truncated at h^k,
///
/// and H^(k-i) . s_i = deg(Y) * [h^i] s(Y). The sectional genus comes
/// from adjunction on the curve section, a complete intersection of the
/// same degrees in P^(s+1):  2g - 2 = deg(Y) * (sum e_j - s - 2).
inline VarietyNumerics complete_intersection_numerics(int ambient_dim,
                                                      const std::vector<Integer>& degrees) {
  const int m = ambient_dim;
  const int s = static_cast<int>(degrees.size());
  if (m < 0) throw std::invalid_argument("complete_intersection_numerics: ambient_dim < 0");
  if (s > m)
    throw std::invalid_argument(
        "complete_intersection_numerics: more hypersurfaces than ambient dimension");
  for (const Integer& e : degrees)
    if (e < 1) throw std::invalid_argument("complete_intersection_numerics: degree < 1");

  const int k = m - s;
  VarietyNumerics v;
  v.dim = k;
  v.degree = 1;
  for (const Integer& e : degrees) v.degree *= e;

  TruncatedClassPolynomial num = TruncatedClassPolynomial::one(k);
  for (const Integer& e : degrees)
    num = truncated_product(num, TruncatedClassPolynomial::linear(k, e));
  TruncatedClassPolynomial den = TruncatedClassPolynomial::one(k);
  const TruncatedClassPolynomial hyper = TruncatedClassPolynomial::linear(k, 1);
  for (int j = 0; j <= m; ++j) den = truncated_product(den, hyper);
  const TruncatedClassPolynomial segre = truncated_product(num, truncated_inverse(den));

  v.segre_numbers.reserve(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) v.segre_numbers.push_back(v.degree * segre.coeff[i]);

  if (k >= 1) {
    Integer esum = 0;
    for (const Integer& e : degrees) esum += e;
    Integer twice = v.degree * (esum - (s + 2));
    if (mpz_odd_p(twice.get_mpz_t()))
      throw std::logic_error("complete_intersection_numerics: non-integral genus");
    v.sectional_genus = 1 + twice / 2;
  }
  return v;
}

/// Smooth k-dimensional quadric: the complete intersection (2) in P^(k+1).
inline VarietyNumerics quadric_numerics(int k) {
  if (k < 0) throw std::invalid_argument("quadric_numerics: k must be >= 0");
  return complete_intersection_numerics(k + 1, {Integer(2)});
}

}  // namespace quadrica
