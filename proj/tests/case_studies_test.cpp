#include <quadrica/case_studies.hpp>

#include <gtest/gtest.h>

using namespace quadrica;

TEST(CaseStudies, RegistrySelfVerifies) {
  std::vector<std::string> failures;
  EXPECT_TRUE(verify_all_case_studies(&failures));
  for (const std::string& f : failures) ADD_FAILURE() << f;
}

TEST(CaseStudies, Lookup) {
  EXPECT_NE(find_case_study("eight-points-p4"), nullptr);
  EXPECT_NE(find_case_study("remW-nine-points"), nullptr);
  EXPECT_NE(find_case_study("segre-p1p2-section"), nullptr);
  EXPECT_NE(find_case_study("g14-section"), nullptr);
  EXPECT_NE(find_case_study("genus3-octic-p5"), nullptr);
  EXPECT_EQ(find_case_study("no-such-configuration"), nullptr);
}

TEST(CaseStudies, EightPointsExcludesN2) {
  const CaseStudyResult res = run_case_study(*find_case_study("eight-points-p4"));
  EXPECT_TRUE(res.ok);
  EXPECT_EQ(res.report.main_lhs, 28);
  EXPECT_EQ(res.report.main_rhs, 35);
  EXPECT_FALSE(res.report.equality_iff_alpha.value());
}

TEST(CaseStudies, NinePointsViolation) {
  const CaseStudyResult res = run_case_study(*find_case_study("remW-nine-points"));
  EXPECT_TRUE(res.ok);
  EXPECT_FALSE(res.report.main_bound_ok);
  bool msg = false;
  for (const std::string& m : res.report.messages)
    if (m == "bound violated: 36 > 35") msg = true;
  EXPECT_TRUE(msg);
}

TEST(CaseStudies, SectionsHitTheClassification) {
  const CaseStudyResult segre = run_case_study(*find_case_study("segre-p1p2-section"));
  ASSERT_TRUE(segre.report.classification_hit.has_value());
  EXPECT_EQ(*segre.report.classification_hit, (std::array<Integer, 3>{3, 2, 0}));
  const CaseStudyResult g14 = run_case_study(*find_case_study("g14-section"));
  ASSERT_TRUE(g14.report.classification_hit.has_value());
  EXPECT_EQ(*g14.report.classification_hit, (std::array<Integer, 3>{5, 3, 1}));
}

TEST(CaseStudies, MismatchesAreReported) {
  CaseStudy broken = *find_case_study("eight-points-p4");
  broken.expected.equality = true;  // wrong on purpose
  const CaseStudyResult res = run_case_study(broken);
  EXPECT_FALSE(res.ok);
  ASSERT_EQ(res.mismatches.size(), 1u);
  EXPECT_NE(res.mismatches[0].find("equality"), std::string::npos);
}
