#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <quadrica/chow.hpp>
#include <quadrica/integer.hpp>

namespace quadrica {

/// Apparent-double-point vector (b_0, ..., b_k): entry i counts the
/// double points of a generic projection to P^(2i) of a generic
/// i-dimensional linear section. Always b_0 = C(degree, 2).
struct BVector {
  std::vector<Integer> values;

  int dim() const { return static_cast<int>(values.size()) - 1; }
  bool operator==(const BVector&) const = default;
};

namespace detail {
inline void require_well_formed(const VarietyNumerics& v, const char* who) {
  if (v.dim < 0 || v.segre_numbers.size() != static_cast<std::size_t>(v.dim) + 1)
    throw std::invalid_argument(std::string(who) + ": Segre number count must be dim + 1");
  if (v.degree < 1) throw std::invalid_argument(std::string(who) + ": degree must be >= 1");
  if (v.segre_numbers[0] != v.degree)
    throw std::invalid_argument(std::string(who) + ": Segre entry 0 must equal the degree");
}
}  // namespace detail

/// Segre numbers H^(k-q-i) . s_i of the generic codimension-q linear
/// section, from the hyperplane-section recursion
///   s_i(section) = sum_j C(q, j) H^(q+j) s_(i-j).
inline std::vector<Integer> section_segre_numbers(const VarietyNumerics& v, int q) {
  detail::require_well_formed(v, "section_segre_numbers");
  const int k = v.dim;
  if (q < 0 || q > k) throw std::invalid_argument("section_segre_numbers: q out of range");
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(k - q) + 1);
  for (int i = 0; i <= k - q; ++i) {
    Integer acc = 0;
    for (int j = 0; j <= q && j <= i; ++j)
      acc += binom(q, j) * v.segre_numbers[static_cast<std::size_t>(i - j)];
    out.push_back(acc);
  }
  return out;
}

namespace detail {
inline Integer exact_half(Integer n, const char* who) {
  if (mpz_odd_p(n.get_mpz_t()))
    throw std::domain_error(std::string(who) + ": odd double-point numerator, Segre data inconsistent");
  return Integer(n / 2);
}
}  // namespace detail

/// Full apparent-double-point vector. For the codimension-q section
/// (dimension kq = k - q, still of degree delta):
///   b_kq = (delta^2 - sum_i C(2 kq + 1, kq - i) H^(kq-i) s_i(section)) / 2.
/// An odd numerator is rejected: it can only come from invalid Segre input.
inline BVector b_vector(const VarietyNumerics& v) {
  const int k = v.dim;
  const Integer d2 = v.degree * v.degree;
  BVector b;
  b.values.assign(static_cast<std::size_t>(k) + 1, 0);
  for (int q = 0; q <= k; ++q) {
    const std::vector<Integer> sec = section_segre_numbers(v, q);
    const int kq = k - q;
    Integer acc = 0;
    for (int i = 0; i <= kq; ++i)
      acc += binom(2 * kq + 1, kq - i) * sec[static_cast<std::size_t>(i)];
    b.values[static_cast<std::size_t>(kq)] = detail::exact_half(d2 - acc, "b_vector");
  }
  if (v.sectional_genus && k >= 1 &&
      b.values[1] != binom(v.degree - 1, 2) - *v.sectional_genus)
    throw std::domain_error("b_vector: b_1 disagrees with the stored sectional genus");
  return b;
}

/// Double points of a generic projection of the 2-Veronese image to
/// P^(2k), straight from the Segre numbers: the re-embedding doubles the
/// hyperplane class, so degree and Segre numbers pick up powers of 2:
///   (2^(2k) delta^2 - sum_i C(2k+1, k-i) 2^(k-i) H^(k-i) s_i) / 2.
inline Integer veronese_double_points_direct(const VarietyNumerics& v) {
  detail::require_well_formed(v, "veronese_double_points_direct");
  const int k = v.dim;
  Integer acc = 0;
  for (int i = 0; i <= k; ++i) {
    Integer term = binom(2 * k + 1, k - i) * v.segre_numbers[static_cast<std::size_t>(i)];
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(k - i));
    acc += term;
  }
  Integer lead = v.degree * v.degree;
  mpz_mul_2exp(lead.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(2 * k));
  return detail::exact_half(lead - acc, "veronese_double_points_direct");
}

/// The same count through the section ladder:
///   sum_i C(2k+1, k-i) b_i.
/// Must stay independent of the direct route; the numerics are the only
/// shared input.
inline Integer veronese_double_points_via_b(const VarietyNumerics& v) {
  const int k = v.dim;
  const BVector b = b_vector(v);
  Integer acc = 0;
  for (int i = 0; i <= k; ++i)
    acc += binom(2 * k + 1, k - i) * b.values[static_cast<std::size_t>(i)];
  return acc;
}

/// C(2k+1, k-i) C(k-i, q) == C(2k+1, q) C(2k-q+1, k-q-i), the coefficient
/// identity behind the triangular system that pins the weights C(2k+1, k-i).
inline bool coefficient_identity_check(int k, int i, int q) {
  if (i < 0 || i > k || q < 1 || q > k)
    throw std::invalid_argument("coefficient_identity_check: need 0 <= i <= k, 1 <= q <= k");
  return binom(2 * k + 1, k - i) * binom(k - i, q) ==
         binom(2 * k + 1, q) * binom(2 * k - q + 1, Integer(k - q - i));
}

}  // namespace quadrica
