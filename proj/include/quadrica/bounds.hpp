#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <quadrica/integer.hpp>

namespace quadrica {

/// Numeric descriptor of an embedded scheme cut out by quadrics:
/// degree d, dimension n, ambient dimension r (so codimension c = r - n),
/// plus the optional data the finer checks consume. `assumption` is a
/// caller-supplied tag naming the hypothesis under which the verdicts
/// are read (e.g. "K2", "N2", "dimW<=2n+1"); it is echoed, never verified.
struct SchemeDescriptor {
  Integer d;
  Integer n;
  Integer r;
  std::optional<Integer> alpha;  // dim of the quadric system minus 1
  std::optional<Integer> g;      // sectional genus
  std::optional<Integer> h0;     // independent quadrics through the scheme
  std::optional<Integer> p;      // syzygy level, >= 2
  std::optional<std::string> assumption;

  Integer codim() const { return Integer(r - n); }

  void validate() const {
    if (d < 1) throw std::invalid_argument("descriptor: degree must be >= 1");
    if (codim() < 2) throw std::invalid_argument("descriptor: codimension must be >= 2");
    if (p && *p < 2) throw std::invalid_argument("descriptor: p must be >= 2");
    if (g && *g < 0) throw std::invalid_argument("descriptor: genus must be >= 0");
    if (h0 && *h0 < 0) throw std::invalid_argument("descriptor: h0 must be >= 0");
  }
};

enum class Regime { MethodSilent, OurWindow, ZakWindow };

inline const char* to_string(Regime rg) {
  switch (rg) {
    case Regime::MethodSilent: return "method-silent";
    case Regime::OurWindow: return "our-window";
    case Regime::ZakWindow: return "zak-window";
  }
  return "?";
}

/// Verdicts for one descriptor. Optional fields stay empty when the
/// inputs needed to evaluate them were not supplied; renderers print
/// them as "not evaluated" instead of guessing.
struct BoundReport {
  Integer c;
  Integer main_lhs;  // C(d, 2)
  Integer main_rhs;  // C(2c-1, c-1)
  bool main_bound_ok = false;
  bool equality = false;
  std::optional<bool> alpha_lower_ok;      // alpha >= 2c - 2
  std::optional<bool> equality_iff_alpha;  // equality <=> alpha == 2c - 2

  std::optional<Integer> np_lhs;  // C(d+2-p, 2)
  std::optional<Integer> np_rhs;  // C(2c+3-2p, c+1-p)
  std::optional<bool> np_bound_ok;
  std::optional<bool> np_equality;
  std::optional<bool> h0_lower_ok;         // h0 >= cp - C(p, 2)
  std::optional<bool> h0_equality_iff_ok;  // np equality <=> h0 == cp - C(p, 2)

  std::optional<std::array<Integer, 3>> classification_hit;  // (d, c, g)
  std::optional<Regime> regime;
  std::vector<std::string> messages;

  /// True when every verdict that was evaluated holds.
  bool all_ok() const {
    auto opt = [](const std::optional<bool>& b) { return !b || *b; };
    return main_bound_ok && opt(alpha_lower_ok) && opt(equality_iff_alpha) &&
           opt(np_bound_ok) && opt(h0_lower_ok) && opt(h0_equality_iff_ok);
  }
};

/// Largest degree d admitted by the main bound C(d, 2) <= C(2c-1, c-1).
inline Integer degree_bound_max(const Integer& c) {
  if (c < 2) throw std::invalid_argument("degree_bound_max: c must be >= 2");
  return triangular_floor(binom(2 * c - 1, c - 1));
}

namespace detail {
/// Window of the quadric count alpha + 1 at codimension c. Below 2c - 1
/// the double-point method is silent; from there to C(c, 2) is its
/// window (for small c where C(c, 2) < 2c - 1 the single value 2c - 1
/// still belongs to it); above that the almost-maximal-count bound
/// d <= 2c takes over.
inline Regime window_of(const Integer& c, const Integer& alpha) {
  const Integer a1 = alpha + 1;
  if (a1 < 2 * c - 1) return Regime::MethodSilent;
  Integer top = binom(c, 2);
  if (top < 2 * c - 1) top = 2 * c - 1;
  return a1 <= top ? Regime::OurWindow : Regime::ZakWindow;
}

inline void fill_regime(BoundReport& rep, const Integer& c, const Integer& alpha) {
  rep.regime = window_of(c, alpha);
  if (alpha + 1 == binom(c + 1, 2))
    rep.messages.push_back("maximal quadric count: minimal degree d = c + 1 forced");
}

inline void classify_hit(BoundReport& rep, const Integer& d, const Integer& c,
                         const std::optional<Integer>& g) {
  // equality cases realizable by a scheme that is smooth and integral in
  // codimension one: the twisted cubic and the elliptic quintic patterns
  if (!g) {
    rep.messages.push_back("equality classification not evaluated: sectional genus missing");
    return;
  }
  if ((d == 3 && c == 2 && *g == 0) || (d == 5 && c == 3 && *g == 1)) {
    rep.classification_hit = std::array<Integer, 3>{d, c, *g};
  } else {
    rep.messages.push_back(
        "equality holds but (d, c, g) matches no smooth-integral classification case");
  }
}
}  // namespace detail

/// Checks alpha >= 2c - 2 and C(d, 2) <= C(2c-1, c-1), flags equality,
/// and tests the biconditional "equality iff alpha = 2c - 2". A failed
/// biconditional rules the stronger hypotheses out, which is recorded as
/// a message.
inline BoundReport main_bound_check(const SchemeDescriptor& s) {
  s.validate();
  BoundReport rep;
  rep.c = s.codim();
  rep.main_lhs = binom(s.d, 2);
  rep.main_rhs = binom(2 * rep.c - 1, rep.c - 1);
  rep.main_bound_ok = rep.main_lhs <= rep.main_rhs;
  rep.equality = rep.main_lhs == rep.main_rhs;
  if (!rep.main_bound_ok)
    rep.messages.push_back("bound violated: " + rep.main_lhs.get_str() + " > " +
                           rep.main_rhs.get_str());
  if (s.alpha) {
    rep.alpha_lower_ok = *s.alpha >= 2 * rep.c - 2;
    const bool alpha_at_floor = (*s.alpha == 2 * rep.c - 2);
    rep.equality_iff_alpha = (rep.equality == alpha_at_floor);
    if (!*rep.equality_iff_alpha)
      rep.messages.push_back(
          "equality criterion violated: N2 / K2 / dim(W)<=2n all impossible");
    detail::fill_regime(rep, rep.c, *s.alpha);
  } else {
    rep.messages.push_back("alpha missing: lower bound and equality criterion not evaluated");
  }
  if (rep.equality) detail::classify_hit(rep, s.d, rep.c, s.g);
  if (s.assumption) rep.messages.push_back("assumption tag: " + *s.assumption + " (caller-supplied, not verified)");
  return rep;
}

/// Syzygy-level refinement: under property N_p or N_{2,p},
///   h0 >= cp - C(p, 2)  and  C(d+2-p, 2) <= C(2c+3-2p, c+1-p),
/// with equality in the second iff h0 = cp - C(p, 2). Equality cases of
/// smooth-integral schemes carry the labels (p+1, p, 0) and (p+3, p+1, 1).
inline BoundReport np_bound_check(const SchemeDescriptor& s) {
  s.validate();
  if (!s.p) throw std::invalid_argument("np_bound_check: descriptor has no p");
  const Integer p = *s.p;
  const Integer c = s.codim();
  if (c + 1 - p < 1) throw std::invalid_argument("np_bound_check: need c + 1 - p >= 1");

  BoundReport rep = main_bound_check(s);
  const Integer dproj = s.d + 2 - p;
  rep.np_lhs = dproj >= 0 ? binom(dproj, 2) : Integer(0);
  if (dproj < 2)
    rep.messages.push_back("degree at most p - 1: the projected pair count is zero");
  rep.np_rhs = binom(2 * c + 3 - 2 * p, c + 1 - p);
  rep.np_bound_ok = *rep.np_lhs <= *rep.np_rhs;
  rep.np_equality = *rep.np_lhs == *rep.np_rhs;
  if (!*rep.np_bound_ok)
    rep.messages.push_back("N_p bound violated: " + rep.np_lhs->get_str() + " > " +
                           rep.np_rhs->get_str());
  const Integer h0_floor = c * p - binom(p, 2);
  if (s.h0) {
    rep.h0_lower_ok = *s.h0 >= h0_floor;
    rep.h0_equality_iff_ok = (*rep.np_equality == (*s.h0 == h0_floor));
    if (!*rep.h0_lower_ok)
      rep.messages.push_back("quadric count below the N_p floor " + h0_floor.get_str());
  } else {
    rep.messages.push_back("h0 missing: N_p quadric-count criterion not evaluated");
  }
  rep.classification_hit.reset();
  if (*rep.np_equality) {
    if (s.g) {
      if (s.d == p + 1 && c == p && *s.g == 0)
        rep.classification_hit = std::array<Integer, 3>{s.d, c, *s.g};
      else if (s.d == p + 3 && c == p + 1 && *s.g == 1)
        rep.classification_hit = std::array<Integer, 3>{s.d, c, *s.g};
      else
        rep.messages.push_back(
            "N_p equality holds but (d, c, g) matches no smooth-integral case");
    } else {
      rep.messages.push_back("N_p equality classification not evaluated: genus missing");
    }
  }
  return rep;
}

/// Castelnuovo's upper bound for the genus of a nondegenerate integral
/// curve of degree d in P^(c+1):  (d-1)^2 / (2c) + (d-1) / 2, exact.
inline Rational castelnuovo_max_genus(const Integer& d, const Integer& c) {
  if (d < 2 || c < 2) throw std::invalid_argument("castelnuovo_max_genus: need d, c >= 2");
  Rational out(Integer((d - 1) * (d - 1)), Integer(2 * c));
  out.canonicalize();
  Rational half(Integer(d - 1), Integer(2));
  half.canonicalize();
  return Rational(out + half);
}

/// The degree cap d <= (3c^2 + 2c - 1) / (c - 1) that Castelnuovo's
/// inequality forces on an equality case, folded back into the equality:
/// returns whether 2 C(2c-1, c-1) <= D (D - 1) still holds for that cap.
inline bool equality_degree_cap_consistent(const Integer& c) {
  if (c < 2) throw std::invalid_argument("equality_degree_cap_consistent: c must be >= 2");
  Rational cap(Integer(3 * c * c + 2 * c - 1), Integer(c - 1));
  cap.canonicalize();
  return Rational(2 * binom(2 * c - 1, c - 1)) <= cap * (cap - 1);
}

/// All (d, c, g) with 2 <= c <= c_max that survive the equality pipeline:
/// C(d, 2) = C(2c-1, c-1) with d integral, sectional genus forced to
/// g = C(d-1, 2) - C(2c-1, c-2), and 0 <= g within Castelnuovo's bound.
/// Survivors are cross-checked against the degree-cap route; the two
/// must agree.
inline std::vector<std::array<Integer, 3>> classify_equality_cases(const Integer& c_max) {
  if (c_max < 2) throw std::invalid_argument("classify_equality_cases: c_max must be >= 2");
  std::vector<std::array<Integer, 3>> out;
  for (Integer c = 2; c <= c_max; ++c) {
    const Integer target = binom(2 * c - 1, c - 1);
    const std::optional<Integer> d = triangular_inverse(target);
    bool survivor = false;
    if (d && *d >= 2) {
      const Integer g = binom(*d - 1, 2) - binom(2 * c - 1, c - 2);
      if (g >= 0 && Rational(g) <= castelnuovo_max_genus(*d, c)) {
        out.push_back({*d, c, g});
        survivor = true;
      }
    }
    if (survivor && !equality_degree_cap_consistent(c))
      throw std::logic_error("classify_equality_cases: survivor at a c ruled out by the degree cap");
  }
  return out;
}

/// Span-refined variant of the main bound,
///   C(d, 2) <= C(2c-1, c-1) + 2c - 2 - beta,
/// where beta is the dimension of the linear span of the image of the
/// auxiliary quadric. beta has no home in the numeric data model and is
/// always caller-supplied; beta = 2c - 2 recovers the main bound and
/// larger beta sharpens it.
inline bool span_refined_bound_check(const Integer& d, const Integer& c, const Integer& beta) {
  if (d < 1 || c < 2) throw std::invalid_argument("span_refined_bound_check: need d >= 1, c >= 2");
  if (beta < 0) throw std::invalid_argument("span_refined_bound_check: need beta >= 0");
  return binom(d, 2) <= binom(2 * c - 1, c - 1) + 2 * c - 2 - beta;
}

/// Genus-refined degree bound for schemes smooth and integral in
/// codimension one:  C(d,2) + C(d-1,2) - g <= C(2c-1,c-1) + C(2c-1,c-2).
inline bool refined_genus_bound_check(const Integer& d, const Integer& c, const Integer& g) {
  if (d < 1 || c < 2 || g < 0)
    throw std::invalid_argument("refined_genus_bound_check: need d >= 1, c >= 2, g >= 0");
  return binom(d, 2) + binom(d - 1, 2) - g <=
         binom(2 * c - 1, c - 1) + binom(2 * c - 1, c - 2);
}

/// Weight of the curve-section term against the point term for the
/// complete intersection of two degree-e hypersurfaces:
///   f(e) = (C(e^2-1, 2) - (e^2 (e-2) + 1)) / C(e^2, 2),
/// which climbs toward 1 from below.
inline Rational f_of_e(const Integer& e) {
  if (e < 2) throw std::invalid_argument("f_of_e: e must be >= 2");
  const Integer e2 = e * e;
  Rational out(Integer(binom(e2 - 1, 2) - (e2 * (e - 2) + 1)), binom(e2, 2));
  out.canonicalize();
  return out;
}

/// Comparison menu for a quadric count alpha + 1 at codimension c.
struct RegimeReport {
  Regime regime = Regime::MethodSilent;
  bool minimal_degree = false;  // alpha + 1 == C(c+1, 2)
  Integer trivial_bound;        // 2^c
  Integer egh_bound;            // 2^(c-1) + 1
  Integer our_d_max;            // largest d with C(d, 2) <= C(2c-1, c-1)
  std::optional<Integer> zak_bound;  // 2c, inside the Zak window
  std::vector<std::string> messages;
};

/// Places alpha + 1 in its window and tabulates the degree bounds that
/// compete there: the complete-intersection ceiling 2^c, the conjectural
/// 2^(c-1) + 1 for the almost-minimal count, our triangular-scan d_max,
/// and d <= 2c when the count is almost maximal.
inline RegimeReport regime_compare(const Integer& d, const Integer& c, const Integer& alpha) {
  if (c < 2) throw std::invalid_argument("regime_compare: c must be >= 2");
  if (alpha < c - 1) throw std::invalid_argument("regime_compare: need alpha >= c - 1");
  RegimeReport rep;
  rep.trivial_bound = Integer(1) << static_cast<unsigned long>(c.get_ui());
  rep.egh_bound = (Integer(1) << static_cast<unsigned long>(c.get_ui() - 1)) + 1;
  rep.our_d_max = degree_bound_max(c);
  rep.regime = detail::window_of(c, alpha);
  const Integer a1 = alpha + 1;
  if (a1 == binom(c + 1, 2)) {
    rep.minimal_degree = true;
    rep.messages.push_back("maximal quadric count: d = c + 1, variety of minimal degree");
  }
  if (a1 > binom(c + 1, 2))
    rep.messages.push_back("quadric count exceeds C(c+1, 2), impossible for a nondegenerate scheme");
  switch (rep.regime) {
    case Regime::ZakWindow:
      rep.zak_bound = 2 * c;
      if (d > *rep.zak_bound) rep.messages.push_back("degree exceeds the window bound 2c");
      break;
    case Regime::OurWindow:
      if (d > rep.our_d_max) rep.messages.push_back("degree exceeds the window bound d_max");
      break;
    case Regime::MethodSilent:
      rep.messages.push_back("alpha + 1 below 2c - 1: the double-point method says nothing");
      break;
  }
  return rep;
}

struct AsymptoticRow {
  long c = 0;
  Integer d_max;
  double ratio = 0.0;  // d_max (pi c)^(1/4) / 2^c
};

namespace detail {
inline double log_of(const Integer& n) {
  signed long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}
}  // namespace detail

/// Exact d_max(c) next to the normalized ratio d_max (pi c)^(1/4) / 2^c,
/// which tends to 1. Only this column is floating point.
inline std::vector<AsymptoticRow> asymptotic_table(long c_from, long c_to) {
  if (c_from < 2 || c_from > c_to)
    throw std::invalid_argument("asymptotic_table: need 2 <= c_from <= c_to");
  std::vector<AsymptoticRow> out;
  out.reserve(static_cast<std::size_t>(c_to - c_from + 1));
  for (long c = c_from; c <= c_to; ++c) {
    AsymptoticRow row;
    row.c = c;
    row.d_max = degree_bound_max(c);
    const double lg = detail::log_of(row.d_max) +
                      0.25 * std::log(M_PI * static_cast<double>(c)) -
                      static_cast<double>(c) * M_LN2;
    row.ratio = std::exp(lg);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace quadrica
