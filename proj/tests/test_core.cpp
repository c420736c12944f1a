#include <gtest/gtest.h>

#include <random>

#include "hwdirac/errors.hpp"
#include "hwdirac/io.hpp"
#include "hwdirac/weyl.hpp"
#include "support.hpp"

using namespace hwdirac;
using namespace hwdirac::testing;

TEST(Core, InnerAndNorm) {
  EXPECT_EQ(inner(rho(AlgebraKind::E6), rho(AlgebraKind::E6)), Rational(78));
  EXPECT_EQ(inner(rho(AlgebraKind::E6), Weight{}), Rational(0));
  const Weight s1 = basic_schmid(AlgebraKind::E6)[0];
  EXPECT_EQ(inner(rho(AlgebraKind::E6), s1), Rational(11));
  EXPECT_EQ(norm_sq(rho(AlgebraKind::E6)), Rational(78));
  EXPECT_EQ(norm_sq(rho(AlgebraKind::E7)), Rational(399, 2));
  EXPECT_EQ(norm_sq(s1), Rational(2));
}

TEST(Core, Rho) {
  EXPECT_EQ(rho(AlgebraKind::E6), (Weight{0, 1, 2, 3, 4, -4, -4, 4}));
  EXPECT_EQ(rho(AlgebraKind::E7), (Weight{0, 1, 2, 3, 4, 5, R("-17/2"), R("17/2")}));
}

TEST(Core, Reflect) {
  const Weight r6 = rho(AlgebraKind::E6);
  EXPECT_EQ(reflect(r6, epsilon(2) - epsilon(1)), (Weight{1, 0, 2, 3, 4, -4, -4, 4}));
  EXPECT_EQ(reflect(Weight{0, 0, 0, 0, 0, 0, 1, -1}, alpha1()), halfvec({1, -1, -1, -1, -1, -1, 1, -1}));
  EXPECT_THROW(reflect(r6, Weight{}), ZeroRootError);
}

TEST(Core, ReflectInvolutionAndIsometry) {
  std::mt19937_64 rng(2024);
  for (const auto alg : {AlgebraKind::E6, AlgebraKind::E7}) {
    const auto& gens = generators(alg);
    for (int i = 0; i < 10000; ++i) {
      const Weight v = random_rational_weight(rng);
      const Weight& a = gens[static_cast<std::size_t>(i) % gens.size()].root;
      const Weight r = reflect(v, a);
      ASSERT_EQ(reflect(r, a), v);
      ASSERT_EQ(norm_sq(r), norm_sq(v));
    }
  }
}

TEST(Core, InnerSymmetricBilinear) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    const Weight u = random_rational_weight(rng), v = random_rational_weight(rng), w = random_rational_weight(rng);
    const Rational k = Rational(static_cast<std::int64_t>(rng() % 19) - 9, static_cast<std::int64_t>(rng() % 5) + 1);
    ASSERT_EQ(inner(u, v), inner(v, u));
    ASSERT_EQ(inner(u + v, w), inner(u, w) + inner(v, w));
    ASSERT_EQ(inner(k * u, w), k * inner(u, w));
  }
}

TEST(Core, ValidateExamples) {
  EXPECT_TRUE(validate_highest_weight(AlgebraKind::E6, Weight{0, 0, 0, 0, 0, 3, 3, -3}).ok());
  const auto bad = validate_highest_weight(AlgebraKind::E6, Weight{1, 0, 0, 0, 0, 3, 3, -3});
  EXPECT_FALSE(bad.ok());
  EXPECT_TRUE(bad.violates(Condition::AbsFirstLeSecond));
  EXPECT_TRUE(validate_highest_weight(AlgebraKind::E7, Weight{0, 0, 0, 0, 0, -10, 5, -5}).ok());
  EXPECT_THROW(require_highest_weight(AlgebraKind::E6, Weight{1, 0, 0, 0, 0, 3, 3, -3}), InvalidWeightError);
}

TEST(Core, ValidateRejectsSingleConditionMutations) {
  // mutation -> the one condition it must violate
  struct Mutation {
    AlgebraKind alg;
    std::function<void(Weight&)> apply;
    Condition cond;
  };
  const std::vector<Mutation> muts{
      {AlgebraKind::E6, [](Weight& w) { w[6] = w[6] + 1; }, Condition::CentreShape},
      {AlgebraKind::E6, [](Weight& w) { w[7] = w[7] + 1; }, Condition::CentreShape},
      {AlgebraKind::E7, [](Weight& w) { w[7] = w[7] + 2; }, Condition::CentreShape},
      {AlgebraKind::E6, [](Weight& w) { w[0] = w[1] + 1; }, Condition::AbsFirstLeSecond},
      {AlgebraKind::E6, [](Weight& w) { w[2] = w[3] + 1; }, Condition::ChainOrder},
  };
  WeightSampler s6(AlgebraKind::E6, 1), s7(AlgebraKind::E7, 2);
  for (int i = 0; i < 200; ++i) {
    for (const auto& m : muts) {
      Weight w = m.alg == AlgebraKind::E6 ? s6.next() : s7.next();
      ASSERT_TRUE(validate_highest_weight(m.alg, w).ok());
      const auto text = format_reduced_weight(m.alg, w);
      ASSERT_EQ(parse_reduced_weight(m.alg, text), w);
      m.apply(w);
      ASSERT_TRUE(validate_highest_weight(m.alg, w).violates(m.cond)) << w.str();
    }
  }
}

TEST(Core, ValidateHalfIntegralityAndClass) {
  auto rep = validate_highest_weight(AlgebraKind::E6, e6({0, 0, 0, 0, R("1/3"), 0}));
  EXPECT_TRUE(rep.violates(Condition::HalfIntegral));
  rep = validate_highest_weight(AlgebraKind::E6, e6({0, 0, 0, 0, R("1/2"), 0}));
  EXPECT_TRUE(rep.violates(Condition::CommonClass));
  EXPECT_FALSE(rep.violates(Condition::HalfIntegral));
  // q = 1/2 (l1 - ... - l6 - 2 l7) with l6 = -9, l7 = 4 and l5 = 0 gives 1/2
  rep = validate_highest_weight(AlgebraKind::E7, e7({0, 0, 0, 0, 0, -9, 4}));
  EXPECT_TRUE(rep.violates(Condition::Alpha1Natural));
  rep = validate_highest_weight(AlgebraKind::E7, e7({0, 0, 0, 0, 0, -6, 4}));
  EXPECT_TRUE(rep.violates(Condition::Alpha1Natural));
  EXPECT_TRUE(validate_highest_weight(AlgebraKind::E7, e7({0, 0, 0, 0, 0, -10, 4})).ok());
}

TEST(Core, WeightBasics) {
  EXPECT_THROW((Weight{1, 2, 3}), std::invalid_argument);
  EXPECT_EQ((Weight{1, 2, 3, 4, 5, 6, 7, 8}).str(), "(1, 2, 3, 4, 5, 6, 7, 8)");
  EXPECT_TRUE(Weight{}.is_zero());
  EXPECT_EQ(alpha1_pairing(rho(AlgebraKind::E7)), Rational(1));
  EXPECT_EQ(norm_sq(alpha1()), Rational(2));
  EXPECT_THROW(epsilon(0), std::out_of_range);
  EXPECT_EQ(parse_algebra("e7"), AlgebraKind::E7);
  EXPECT_THROW(parse_algebra("e8"), ParseError);
}
