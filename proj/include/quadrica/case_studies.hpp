#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <quadrica/bounds.hpp>

namespace quadrica {

/// A named descriptor with the verdicts it must produce. The registry
/// self-verifies on first access: every expected fragment is matched
/// against a fresh computation, and a mismatch rejects the whole table.
struct CaseStudy {
  struct Expected {
    std::optional<bool> main_bound_ok;
    std::optional<bool> equality;
    std::optional<bool> alpha_lower_ok;
    std::optional<bool> equality_iff_alpha;
    std::optional<std::array<Integer, 3>> classification_hit;
  };

  std::string name;
  SchemeDescriptor descriptor;
  Expected expected;
  std::string note;
};

struct CaseStudyResult {
  bool ok = false;
  BoundReport report;
  std::vector<std::string> mismatches;
};

inline CaseStudyResult run_case_study(const CaseStudy& cs) {
  CaseStudyResult res;
  res.report = main_bound_check(cs.descriptor);
  auto check_flag = [&res](const char* what, const std::optional<bool>& want,
                           const std::optional<bool>& got) {
    if (!want) return;
    if (!got)
      res.mismatches.push_back(std::string(what) + ": expected a verdict, none evaluated");
    else if (*want != *got)
      res.mismatches.push_back(std::string(what) + ": expected " +
                               (*want ? "true" : "false") + ", got " +
                               (*got ? "true" : "false"));
  };
  check_flag("main_bound_ok", cs.expected.main_bound_ok, res.report.main_bound_ok);
  check_flag("equality", cs.expected.equality, res.report.equality);
  check_flag("alpha_lower_ok", cs.expected.alpha_lower_ok, res.report.alpha_lower_ok);
  check_flag("equality_iff_alpha", cs.expected.equality_iff_alpha, res.report.equality_iff_alpha);
  if (cs.expected.classification_hit) {
    if (!res.report.classification_hit)
      res.mismatches.push_back("classification_hit: expected a label, got none");
    else if (*res.report.classification_hit != *cs.expected.classification_hit)
      res.mismatches.push_back("classification_hit: label differs");
  }
  res.ok = res.mismatches.empty();
  return res;
}

namespace detail {
inline std::vector<CaseStudy> verified(std::vector<CaseStudy> v) {
  for (const CaseStudy& cs : v)
    if (!run_case_study(cs).ok)
      throw std::logic_error("case study registry self-verification failed: " + cs.name);
  return v;
}
}  // namespace detail

inline const std::vector<CaseStudy>& case_studies() {
  static const std::vector<CaseStudy> registry = [] {
    std::vector<CaseStudy> v;

    {
      CaseStudy cs;
      cs.name = "eight-points-p4";
      cs.descriptor = {Integer(8), Integer(0), Integer(4), Integer(6), std::nullopt,
                       std::nullopt, std::nullopt, std::nullopt};
      cs.expected = {true, false, true, false, std::nullopt};
      cs.note =
          "8 general points in P^4 cut out by 7 quadrics: 28 <= 35 holds but the "
          "equality criterion fails at alpha = 2c - 2, so property N2 is excluded";
      v.push_back(std::move(cs));
    }
    {
      CaseStudy cs;
      cs.name = "remW-nine-points";
      cs.descriptor = {Integer(9), Integer(0), Integer(4), Integer(6), std::nullopt,
                       std::nullopt, std::nullopt, std::nullopt};
      cs.expected = {false, false, true, std::nullopt, std::nullopt};
      cs.note =
          "9 base points in P^4 of a system whose double-cover line locus is too "
          "big: the bound fails, 36 > 35";
      v.push_back(std::move(cs));
    }
    {
      CaseStudy cs;
      cs.name = "segre-p1p2-section";
      cs.descriptor = {Integer(3), Integer(1), Integer(3), Integer(2), Integer(0),
                       std::nullopt, std::nullopt, std::nullopt};
      cs.expected = {true, true, true, true,
                     std::array<Integer, 3>{Integer(3), Integer(2), Integer(0)}};
      cs.note =
          "generic curve section of the Segre embedding of P^1 x P^2 in P^5: a "
          "twisted cubic, the (3, 2, 0) equality case";
      v.push_back(std::move(cs));
    }
    {
      CaseStudy cs;
      cs.name = "g14-section";
      cs.descriptor = {Integer(5), Integer(1), Integer(4), Integer(4), Integer(1),
                       std::nullopt, std::nullopt, std::nullopt};
      cs.expected = {true, true, true, true,
                     std::array<Integer, 3>{Integer(5), Integer(3), Integer(1)}};
      cs.note =
          "generic curve section of the Pluecker-embedded Grassmannian of lines of "
          "P^4: an elliptic normal quintic, the (5, 3, 1) equality case";
      v.push_back(std::move(cs));
    }
    {
      CaseStudy cs;
      cs.name = "genus3-octic-p5";
      cs.descriptor = {Integer(8), Integer(1), Integer(5), Integer(6), Integer(3),
                       std::nullopt, std::nullopt, std::nullopt};
      cs.expected = {true, false, true, false, std::nullopt};
      cs.note =
          "a degree-8 genus-3 curve in P^5: same arithmetic as the eight-point "
          "configuration, property N2 is excluded";
      v.push_back(std::move(cs));
    }
    return detail::verified(std::move(v));
  }();
  return registry;
}

inline const CaseStudy* find_case_study(std::string_view name) {
  for (const CaseStudy& cs : case_studies())
    if (cs.name == name) return &cs;
  return nullptr;
}

/// Registry-wide self verification; true when every expected fragment
/// matches a fresh computation.
inline bool verify_all_case_studies(std::vector<std::string>* failures = nullptr) {
  bool ok = true;
  for (const CaseStudy& cs : case_studies()) {
    const CaseStudyResult res = run_case_study(cs);
    if (!res.ok) {
      ok = false;
      if (failures)
        for (const std::string& m : res.mismatches) failures->push_back(cs.name + ": " + m);
    }
  }
  return ok;
}

}  // namespace quadrica
