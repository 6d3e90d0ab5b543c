#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include <quadrica/double_points.hpp>
#include <quadrica/integer.hpp>

namespace quadrica {

/// Integer combination of Schubert classes Omega(p, q) in the
/// Grassmannian G(1, r) of lines of P^r. Omega(p, q) parametrizes lines
/// contained in a fixed q-plane and meeting a fixed p-plane inside it;
/// its dimension is p + q - 1. All stored terms must share one
/// dimension and zero coefficients are never stored.
class SchubertCycle {
 public:
  using Index = std::pair<int, int>;  // (p, q), 0 <= p < q <= r

  explicit SchubertCycle(int r) : r_(r) {
    if (r < 1) throw std::invalid_argument("SchubertCycle: need r >= 1");
  }

  int ambient() const { return r_; }
  const std::map<Index, Integer>& terms() const { return terms_; }

  /// Dimension of the (pure-dimensional) class; empty for the zero cycle.
  std::optional<int> dimension() const {
    if (terms_.empty()) return std::nullopt;
    const Index& ix = terms_.begin()->first;
    return ix.first + ix.second - 1;
  }

  void add_term(int p, int q, const Integer& coeff) {
    if (coeff == 0) return;
    if (p < 0 || p >= q || q > r_)
      throw std::invalid_argument("SchubertCycle: need 0 <= p < q <= r");
    if (const auto d = dimension(); d && *d != p + q - 1)
      throw std::invalid_argument("SchubertCycle: mixed-dimension terms rejected");
    Integer& slot = terms_[{p, q}];
    slot += coeff;
    if (slot == 0) terms_.erase({p, q});
  }

  friend SchubertCycle operator+(const SchubertCycle& a, const SchubertCycle& b) {
    if (a.r_ != b.r_) throw std::invalid_argument("SchubertCycle: ambient mismatch");
    SchubertCycle out = a;
    for (const auto& [ix, c] : b.terms_) out.add_term(ix.first, ix.second, c);
    return out;
  }

  friend SchubertCycle operator*(const Integer& s, const SchubertCycle& a) {
    SchubertCycle out(a.r_);
    if (s == 0) return out;
    for (const auto& [ix, c] : a.terms_) out.add_term(ix.first, ix.second, s * c);
    return out;
  }

 private:
  int r_;
  std::map<Index, Integer> terms_;
};

/// Intersection pairing of classes of complementary dimension in G(1, r).
/// On the basis the dual-cell rule applies:
///   <Omega(p, q), Omega(p', q')> = 1  iff  p + q' = r and q + p' = r.
inline Integer pairing(const SchubertCycle& a, const SchubertCycle& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("pairing: cycles live in different Grassmannians");
  if (a.terms().empty() || b.terms().empty()) return 0;
  const int r = a.ambient();
  if (*a.dimension() + *b.dimension() != 2 * r - 2)
    throw std::invalid_argument("pairing: dimensions are not complementary");
  Integer acc = 0;
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms())
      if (ia.first + ib.second == r && ia.second + ib.first == r) acc += ca * cb;
  return acc;
}

/// Class of the secant-line family of an h-dimensional subvariety with
/// apparent-double-point vector a, inside G(1, r):
///   S = sum_i a_(h-i) Omega(i, 2h+1-i).
/// When 2h+1 > r the leading cells do not exist in G(1, r) and the sum
/// runs over the remaining ones, i >= 2h+1-r; for 2h+1 <= r every cell
/// appears.
inline SchubertCycle secant_cycle(const BVector& a, int r) {
  const int h = a.dim();
  if (h < 0) throw std::invalid_argument("secant_cycle: empty double-point vector");
  if (r < h + 1) throw std::invalid_argument("secant_cycle: need r >= h + 1");
  SchubertCycle s(r);
  for (int i = std::max(0, 2 * h + 1 - r); i <= h; ++i)
    s.add_term(i, 2 * h + 1 - i, a.values[static_cast<std::size_t>(h - i)]);
  return s;
}

/// Number of lines of P^r secant to both of two subvarieties in general
/// position with h + k = r - 1: sum_i a_i b_i. The result is checked
/// against the Schubert pairing of the two secant cycles.
inline Integer common_secant_count(const BVector& a, const BVector& b, int r) {
  const int h = a.dim();
  const int k = b.dim();
  if (h < 0 || k < 0) throw std::invalid_argument("common_secant_count: empty vector");
  if (h + k != r - 1) throw std::invalid_argument("common_secant_count: need h + k = r - 1");
  Integer acc = 0;
  const int top = h < k ? h : k;
  for (int i = 0; i <= top; ++i)
    acc += a.values[static_cast<std::size_t>(i)] * b.values[static_cast<std::size_t>(i)];
  const BVector& lo = (h <= k) ? a : b;
  const BVector& hi = (h <= k) ? b : a;
  if (pairing(secant_cycle(lo, r), secant_cycle(hi, r)) != acc)
    throw std::logic_error("common_secant_count: pairing route disagrees");
  return acc;
}

}  // namespace quadrica
