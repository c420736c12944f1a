#include <gtest/gtest.h>

#include "hwdirac/classify.hpp"
#include "hwdirac/errors.hpp"
#include "support.hpp"

using namespace hwdirac;
using namespace hwdirac::testing;

TEST(Classify, ClosedFormExamples) {
  auto c = classify_closed_form(AlgebraKind::E6, Weight{0, 0, 0, 0, 0, 3, 3, -3});
  EXPECT_EQ(c.verdict, Verdict::Unitary);
  EXPECT_FALSE(c.witness);
  EXPECT_EQ(c.basis, Basis::ClosedFormTheorem);

  c = classify_closed_form(AlgebraKind::E6, Weight{0, 0, 0, 0, 1, 4, 4, -4});
  EXPECT_EQ(c.verdict, Verdict::NotUnitary);
  EXPECT_EQ(c.witness, (SchmidModule{0, 1, 0}));

  c = classify_closed_form(AlgebraKind::E7, Weight{0, 0, 0, 0, 0, -6, 3, -3});
  EXPECT_EQ(c.verdict, Verdict::NotUnitary);
  EXPECT_EQ(c.witness, (SchmidModule{0, 0, 1}));
}

TEST(Classify, ScanExamples) {
  auto c = classify_by_scan(AlgebraKind::E6, Weight{0, 0, 0, 0, 0, 1, 1, -1}, 8);
  EXPECT_EQ(c.verdict, Verdict::NotUnitary);
  EXPECT_EQ(c.witness, (SchmidModule{0, 1, 0}));
  EXPECT_EQ(c.basis, Basis::LevelOrderedScan);
  EXPECT_EQ(c.scan_level, 8);

  c = classify_by_scan(AlgebraKind::E6, Weight{0, 0, 0, 0, 0, 2, 2, -2}, 8);
  EXPECT_EQ(c.verdict, Verdict::Boundary);
  EXPECT_FALSE(c.witness);

  c = classify_by_scan(AlgebraKind::E7, Weight{0, 0, 0, 0, 0, -10, 5, -5}, 12);
  EXPECT_EQ(c.verdict, Verdict::Unitary);
}

TEST(Classify, ThresholdBoundaries) {
  for (const char* l6 : {"0", "2"})
    EXPECT_EQ(classify_closed_form(AlgebraKind::E6, e6({0, 0, 0, 0, 0, R(l6)})).verdict, Verdict::Boundary);
  // 3 l6 - l5 = 8 and 14 with l5 = 1
  for (const char* l6 : {"3", "5"})
    EXPECT_EQ(classify_closed_form(AlgebraKind::E6, e6({0, 0, 0, 0, 1, R(l6)})).verdict, Verdict::Boundary);
  for (int l7 : {0, 2, 4})
    EXPECT_EQ(classify_closed_form(AlgebraKind::E7, e7({0, 0, 0, 0, 0, -2 * l7, l7})).verdict, Verdict::Boundary);
  for (int l7 : {4, 6})
    EXPECT_EQ(classify_closed_form(AlgebraKind::E7, e7({0, 0, 0, 0, 1, -1 - 2 * l7, l7})).verdict, Verdict::Boundary);
}

TEST(Classify, Case3UsesBasicModule) {
  // E6 Case 1.1: margin(s1) = 3 l6 - sum - 20
  const Weight l = e6({1, 1, 1, 1, 1, 9});
  EXPECT_EQ(classify_closed_form(AlgebraKind::E6, l).verdict, Verdict::Unitary);
  const Weight z = e6({1, 1, 1, 1, 1, R("25/3")});
  EXPECT_EQ(classify_closed_form(AlgebraKind::E6, z).verdict, Verdict::Boundary);
  EXPECT_EQ(classify_by_scan(AlgebraKind::E6, z).verdict, Verdict::Boundary);
  const Weight n = e6({1, 1, 1, 1, 1, 8});
  const auto c = classify_closed_form(AlgebraKind::E6, n);
  EXPECT_EQ(c.verdict, Verdict::NotUnitary);
  EXPECT_EQ(c.witness, (SchmidModule{1, 0, 0}));
}

TEST(Classify, VerdictStableUnderRaisingLevel) {
  for (const auto alg : {AlgebraKind::E6, AlgebraKind::E7}) {
    WeightSampler sampler(alg, 31);
    for (int i = 0; i < 150; ++i) {
      const Weight l = sampler.next();
      const auto base = classify_by_scan(alg, l, 6);
      if (base.verdict == Verdict::Undetermined) continue;
      for (std::int64_t L : {9, 14}) {
        const auto c = classify_by_scan(alg, l, L);
        ASSERT_EQ(c.verdict, base.verdict) << l.str();
        ASSERT_EQ(c.witness, base.witness) << l.str();
      }
    }
  }
}

TEST(Classify, WitnessSatisfiesLowestLevelHypothesis) {
  for (const auto alg : {AlgebraKind::E6, AlgebraKind::E7}) {
    WeightSampler sampler(alg, 17);
    for (int i = 0; i < 200; ++i) {
      const Weight l = sampler.next();
      const auto sc = scan(alg, l, 10);
      const auto c = classify_from_scan(alg, l, sc, 10);
      if (c.verdict != Verdict::NotUnitary) continue;
      const auto wl = level(alg, *c.witness);
      EXPECT_EQ(dirac_margin(alg, l, *c.witness).sign, Sign::Negative);
      for (const auto& r : sc.reports)
        if (level(alg, r.schmid) < wl) ASSERT_EQ(r.sign, Sign::Positive) << l.str();
    }
  }
}

TEST(Classify, RejectsInvalid) {
  EXPECT_THROW(classify_closed_form(AlgebraKind::E6, Weight{1, 0, 0, 0, 0, 0, 0, 0}), InvalidWeightError);
  EXPECT_THROW(classify_by_scan(AlgebraKind::E6, Weight{}, 0), std::invalid_argument);
}

TEST(Classify, Names) {
  EXPECT_EQ(to_string(Verdict::NotUnitary), "NotUnitary");
  EXPECT_EQ(to_string(Basis::ClosedFormTheorem), "closed_form_theorem");
  EXPECT_EQ(to_string(Basis::LevelOrderedScan), "level_ordered_scan");
}
