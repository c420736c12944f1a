#include <gtest/gtest.h>

#include <random>

#include "hwdirac/errors.hpp"
#include "hwdirac/weyl.hpp"
#include "support.hpp"

using namespace hwdirac;
using namespace hwdirac::testing;

TEST(Weyl, GeneratorCounts) {
  EXPECT_EQ(generators(AlgebraKind::E6).size(), 20u);
  EXPECT_EQ(generators(AlgebraKind::E7).size(), 21u);
  const Weight a1 = halfvec({1, -1, -1, -1, -1, -1, -1, 1});
  EXPECT_EQ(generators(AlgebraKind::E7)[kAlpha1Index].root, a1);
  EXPECT_EQ(generators(AlgebraKind::E7)[kAlpha1Index].label, "a1");
  for (const auto& g : generators(AlgebraKind::E7)) EXPECT_EQ(norm_sq(g.root), Rational(2)) << g.label;
}

TEST(Weyl, GeneratorLabels) {
  EXPECT_EQ(generator_index(AlgebraKind::E6, "e2-e1"), pair_generator_index(2, 1, -1));
  EXPECT_EQ(generator_index(AlgebraKind::E6, "e5+e4"), pair_generator_index(5, 4, +1));
  EXPECT_EQ(generators(AlgebraKind::E6)[generator_index(AlgebraKind::E6, "e4+e2")].root, epsilon(4) + epsilon(2));
  EXPECT_THROW(generator_index(AlgebraKind::E6, "a1"), UnknownLabelError);
  EXPECT_THROW(generator_index(AlgebraKind::E7, "e1-e2"), UnknownLabelError);
}

TEST(Weyl, ApplyEmptyWordIsIdentity) {
  const Weight v{1, 2, 3, 4, 5, 6, 7, 8};
  EXPECT_EQ(apply(AlgebraKind::E6, WeylWord{}, v), v);
}

TEST(Weyl, ApplyDisplayedChainForZeroChainE7) {
  const std::vector<std::string> labels{"e5-e1", "a1", "e3+e2", "e5+e4"};
  const WeylWord w = WeylWord::from_labels(AlgebraKind::E7, labels);
  const Rational l6(-10), l7(5);
  const Weight v{R("1/2"), R("-1/2"), R("-1/2"), R("-1/2"), R("-1/2"), l6 - R("1/2"), l7 + R("1/2"), -l7 - R("1/2")};
  EXPECT_EQ(apply(AlgebraKind::E7, w, v), (Weight{0, 0, 0, 0, 1, l6 - 1, l7, -l7}));
  EXPECT_EQ(w.labels(AlgebraKind::E7), labels);
}

TEST(Weyl, ApplyRejectsForeignLetters) {
  WeylWord w;
  w.letters.push_back(static_cast<std::uint8_t>(kAlpha1Index));
  EXPECT_THROW(apply(AlgebraKind::E6, w, Weight{}), UnknownLabelError);
}

TEST(Weyl, DominantExamples) {
  const Weight d{0, 0, 0, 0, 1, 4, 4, -4};
  auto r = dominant(AlgebraKind::E6, d);
  EXPECT_EQ(r.weight, d);
  EXPECT_TRUE(r.word.empty());

  const Weight v{0, 0, 0, 0, -1, 4, 4, -4};
  r = dominant(AlgebraKind::E6, v);
  EXPECT_EQ(r.weight, d);
  EXPECT_EQ(apply(AlgebraKind::E6, r.word, v), d);

  const Weight u{R("1/2"), R("-1/2"), R("-1/2"), R("-1/2"), R("-1/2"), R("-21/2"), R("11/2"), R("-11/2")};
  r = dominant(AlgebraKind::E7, u);
  EXPECT_EQ(r.weight, (Weight{0, 0, 0, 0, 1, -11, 5, -5}));
  EXPECT_EQ(apply(AlgebraKind::E7, r.word, u), r.weight);
}

TEST(Weyl, RandomWord) {
  EXPECT_TRUE(random_word(AlgebraKind::E6, 0, 9).empty());
  EXPECT_EQ(random_word(AlgebraKind::E6, 5, 42), random_word(AlgebraKind::E6, 5, 42));
  EXPECT_NE(random_word(AlgebraKind::E6, 20, 42), random_word(AlgebraKind::E6, 20, 43));
  const auto w = random_word(AlgebraKind::E7, 20, 7);
  EXPECT_EQ(w.size(), 20u);
  EXPECT_EQ(norm_sq(apply(AlgebraKind::E7, w, rho(AlgebraKind::E7))), Rational(399, 2));
}

TEST(Weyl, DominantIsIdempotentCertifiedAndFastPathAgrees) {
  std::mt19937_64 rng(77);
  for (const auto alg : {AlgebraKind::E6, AlgebraKind::E7}) {
    for (int i = 0; i < 3000; ++i) {
      const Weight v = random_rational_weight(rng);
      const auto r = dominant(alg, v);
      ASSERT_TRUE(is_dominant(alg, r.weight)) << v.str();
      ASSERT_EQ(apply(alg, r.word, v), r.weight);
      ASSERT_EQ(dominant_weight(alg, v), r.weight);
      const auto again = dominant(alg, r.weight);
      ASSERT_EQ(again.weight, r.weight);
      ASSERT_TRUE(again.word.empty());
    }
  }
}

TEST(Weyl, DominantIsConstantOnOrbits) {
  std::mt19937_64 rng(8);
  for (const auto alg : {AlgebraKind::E6, AlgebraKind::E7}) {
    for (int i = 0; i < 500; ++i) {
      const Weight v = random_rational_weight(rng);
      const Weight moved = apply(alg, random_word(alg, 15, rng()), v);
      ASSERT_EQ(dominant_weight(alg, moved), dominant_weight(alg, v)) << v.str();
    }
  }
}

TEST(Weyl, OrbitOracleAgrees) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Weight v = random_rational_weight(rng);
    const auto members = d5_orbit_chamber_members(v);
    ASSERT_EQ(members.size(), 1u);
    ASSERT_EQ(members.front(), dominant(AlgebraKind::E6, v).weight);
  }
  const Weight d{0, 0, 0, 0, 1, 4, 4, -4};
  EXPECT_EQ(d5_orbit_chamber_members(d).front(), d);
  EXPECT_EQ(d5_orbit_chamber_members(Weight{0, 0, 0, 0, -1, 4, 4, -4}).front(), d);
}

TEST(Weyl, IsDominantChecksChamber) {
  EXPECT_TRUE(is_dominant(AlgebraKind::E6, Weight{-1, 1, 2, 2, 3, 9, 9, 9}));
  EXPECT_FALSE(is_dominant(AlgebraKind::E6, Weight{-2, 1, 2, 2, 3, 0, 0, 0}));
  EXPECT_FALSE(is_dominant(AlgebraKind::E7, Weight{0, 0, 0, 0, 0, 0, 1, -1}));
  EXPECT_TRUE(is_dominant(AlgebraKind::E6, Weight{0, 0, 0, 0, 0, 0, 1, -1}));
}
