#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <quadrica/integer.hpp>

namespace quadrica {

using ProjectivePoint = std::vector<Rational>;  // homogeneous coordinates, length r+1

/// Quadratic form on P^r stored as its symmetric (r+1)x(r+1) matrix M,
/// so the form is  x^T M x  = sum_i M_ii x_i^2 + 2 sum_{i<j} M_ij x_i x_j.
struct QuadraticForm {
  std::vector<std::vector<Rational>> m;

  static QuadraticForm zero(int r) {
    if (r < 1) throw std::invalid_argument("QuadraticForm: need r >= 1");
    QuadraticForm f;
    f.m.assign(static_cast<std::size_t>(r) + 1,
               std::vector<Rational>(static_cast<std::size_t>(r) + 1, Rational(0)));
    return f;
  }

  int ambient() const { return static_cast<int>(m.size()) - 1; }

  void set_entry(int i, int j, const Rational& c) {
    m.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)) = c;
    m.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(i)) = c;
  }

  /// Bilinear form u^T M v.
  Rational eval_bilinear(const ProjectivePoint& u, const ProjectivePoint& v) const {
    const std::size_t n = m.size();
    if (u.size() != n || v.size() != n)
      throw std::invalid_argument("QuadraticForm: point dimension mismatch");
    Rational acc(0);
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] == 0) continue;
      Rational row(0);
      for (std::size_t j = 0; j < n; ++j) row += m[i][j] * v[j];
      acc += u[i] * row;
    }
    return acc;
  }
};

/// lambda x^2 + mu xy + nu y^2 on a parametrized line.
struct BinaryQuadric {
  Rational xx, xy, yy;

  bool is_zero() const { return xx == 0 && xy == 0 && yy == 0; }
  bool operator==(const BinaryQuadric&) const = default;
};

/// Outcome of restricting a quadric linear system to a line L:
/// either L sits inside the base scheme, or the map contracts L
/// (through two distinct base points, or one doubled tangency point),
/// or it extends to an isomorphism past a single base point, or it is
/// base-point free on L and embeds L as a conic, or double-covers a line.
enum class LineCase {
  ContainedInX,
  ContractedTwoPoints,
  ContractedTangent,
  MeetsAtOnePoint,
  VeroneseEmbedding,
  DoubleCover,
};

inline const char* to_string(LineCase c) {
  switch (c) {
    case LineCase::ContainedInX: return "contained-in-X";
    case LineCase::ContractedTwoPoints: return "contracted-two-points";
    case LineCase::ContractedTangent: return "contracted-tangent";
    case LineCase::MeetsAtOnePoint: return "meets-at-one-point";
    case LineCase::VeroneseEmbedding: return "veronese-embedding";
    case LineCase::DoubleCover: return "double-cover";
  }
  return "?";
}

inline bool is_zero_point(const ProjectivePoint& p) {
  for (const Rational& c : p)
    if (c != 0) return false;
  return true;
}

/// True when p and q are proportional, i.e. equal as points of P^r.
inline bool projectively_equal(const ProjectivePoint& p, const ProjectivePoint& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("projectively_equal: dimension mismatch");
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] * q[j] != p[j] * q[i]) return false;
  return true;
}

/// Pulls every form back through the parametrization x P + y Q of the
/// line PQ; the result is (f(P,P), 2 f(P,Q), f(Q,Q)) per form, in the
/// bilinear-form sense.
inline std::vector<BinaryQuadric> restrict_to_line(const std::vector<QuadraticForm>& forms,
                                                   const ProjectivePoint& p,
                                                   const ProjectivePoint& q) {
  if (is_zero_point(p) || is_zero_point(q))
    throw std::invalid_argument("restrict_to_line: zero coordinate vector");
  if (projectively_equal(p, q))
    throw std::invalid_argument("restrict_to_line: points coincide, no line spanned");
  std::vector<BinaryQuadric> out;
  out.reserve(forms.size());
  for (const QuadraticForm& f : forms) {
    BinaryQuadric b;
    b.xx = f.eval_bilinear(p, p);
    b.xy = 2 * f.eval_bilinear(p, q);
    b.yy = f.eval_bilinear(q, q);
    out.push_back(std::move(b));
  }
  return out;
}

namespace detail {

/// Row space basis of the triples, by exact Gauss elimination.
inline std::vector<std::array<Rational, 3>> row_span_basis(const std::vector<BinaryQuadric>& v) {
  std::vector<std::array<Rational, 3>> rows;
  rows.reserve(v.size());
  for (const BinaryQuadric& b : v) rows.push_back({b.xx, b.xy, b.yy});
  std::vector<std::array<Rational, 3>> basis;
  std::size_t col = 0;
  for (; col < 3 && !rows.empty(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows.size()) continue;
    std::array<Rational, 3> prow = rows[pivot];
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
    for (auto& r : rows) {
      if (r[col] == 0) continue;
      const Rational factor = r[col] / prow[col];
      for (std::size_t j = col; j < 3; ++j) r[j] -= factor * prow[j];
    }
    basis.push_back(std::move(prow));
  }
  return basis;
}

/// Degree in x of f(x, 1); -1 for the zero form.
inline int dehomogenized_degree(const std::array<Rational, 3>& f) {
  if (f[0] != 0) return 2;
  if (f[1] != 0) return 1;
  if (f[2] != 0) return 0;
  return -1;
}

/// Degree of gcd of two nonzero binary quadratic forms. The y-adic part
/// contributes min of the y-multiplicities (2 - degree of f(x,1)); the
/// rest is a Euclid run on the dehomogenizations.
inline int binary_gcd_degree(const std::array<Rational, 3>& f, const std::array<Rational, 3>& g) {
  const int df = dehomogenized_degree(f);
  const int dg = dehomogenized_degree(g);
  if (df < 0 || dg < 0) throw std::invalid_argument("binary_gcd_degree: zero form");
  const int ypart = std::min(2 - df, 2 - dg);

  // coefficient vectors of f(x,1), g(x,1), descending powers, leading
  // coefficient nonzero; the zero polynomial is the empty vector
  auto dehom = [](const std::array<Rational, 3>& h, int d) {
    std::vector<Rational> c;
    for (int i = 2 - d; i < 3; ++i) c.push_back(h[static_cast<std::size_t>(i)]);
    return c;
  };
  auto trim = [](std::vector<Rational>& v) {
    std::size_t i = 0;
    while (i < v.size() && v[i] == 0) ++i;
    v.erase(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(i));
  };
  auto poly_mod = [&trim](std::vector<Rational> a, const std::vector<Rational>& b) {
    while (a.size() >= b.size()) {
      const Rational factor = a[0] / b[0];
      for (std::size_t i = 0; i < b.size(); ++i) a[i] -= factor * b[i];
      trim(a);
    }
    return a;
  };
  std::vector<Rational> a = dehom(f, df);
  std::vector<Rational> b = dehom(g, dg);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    std::vector<Rational> r = poly_mod(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return ypart + static_cast<int>(a.size()) - 1;
}

}  // namespace detail

/// Exact classification of a restricted quadric system. With sigma the
/// rank of the system and G the gcd of the span:
///
///   sigma = 0                       -> ContainedInX
///   sigma = 1, distinct roots       -> ContractedTwoPoints
///   sigma = 1, double root          -> ContractedTangent
///   sigma = 2, deg G = 1            -> MeetsAtOnePoint
///   sigma = 2, deg G = 0            -> DoubleCover
///   sigma = 3                       -> VeroneseEmbedding
///
/// sigma = 2 with deg G = 2 cannot occur (the forms would be
/// proportional) and sigma = 3 forces an empty base locus.
inline LineCase classify(const std::vector<BinaryQuadric>& restricted) {
  const std::vector<std::array<Rational, 3>> basis = detail::row_span_basis(restricted);
  switch (basis.size()) {
    case 0:
      return LineCase::ContainedInX;
    case 1: {
      const Rational disc = basis[0][1] * basis[0][1] - 4 * basis[0][0] * basis[0][2];
      return disc != 0 ? LineCase::ContractedTwoPoints : LineCase::ContractedTangent;
    }
    case 2: {
      const int dg = detail::binary_gcd_degree(basis[0], basis[1]);
      if (dg >= 2) throw std::logic_error("classify: rank-2 span with a quadratic gcd");
      return dg == 1 ? LineCase::MeetsAtOnePoint : LineCase::DoubleCover;
    }
    default:
      return LineCase::VeroneseEmbedding;
  }
}

struct LineSampleReport {
  long trials = 0;
  long height = 0;
  std::uint64_t seed = 0;
  std::map<LineCase, long> counts;
  bool double_cover_found = false;
};

/// Classifies `trials` random lines, each spanned by two points with
/// integer coordinates in [-height, height] (coincident pairs redrawn).
/// Deterministic for a fixed seed. The report says whether any
/// double-cover line was seen, i.e. whether the sample witnesses a
/// nonempty double-cover locus.
inline LineSampleReport sample_lines(const std::vector<QuadraticForm>& forms, long trials,
                                     std::uint64_t seed, long height = 10) {
  if (trials < 1) throw std::invalid_argument("sample_lines: trials must be >= 1");
  if (height < 1) throw std::invalid_argument("sample_lines: height must be >= 1");
  if (forms.empty()) throw std::invalid_argument("sample_lines: empty system");
  const int r = forms.front().ambient();
  for (const QuadraticForm& f : forms)
    if (f.ambient() != r) throw std::invalid_argument("sample_lines: mixed ambient dimensions");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-height, height);
  auto draw = [&]() {
    ProjectivePoint p(static_cast<std::size_t>(r) + 1);
    do {
      for (auto& c : p) c = Rational(coord(rng));
    } while (is_zero_point(p));
    return p;
  };

  LineSampleReport rep;
  rep.trials = trials;
  rep.height = height;
  rep.seed = seed;
  for (long t = 0; t < trials; ++t) {
    const ProjectivePoint p = draw();
    ProjectivePoint q = draw();
    while (projectively_equal(p, q)) q = draw();
    const LineCase c = classify(restrict_to_line(forms, p, q));
    ++rep.counts[c];
    if (c == LineCase::DoubleCover) rep.double_cover_found = true;
  }
  return rep;
}

}  // namespace quadrica
