#include <gtest/gtest.h>

#include "hwdirac/schmid.hpp"
#include "support.hpp"

using namespace hwdirac;
using namespace hwdirac::testing;

TEST(Schmid, BasicWeights) {
  EXPECT_EQ(basic_schmid(AlgebraKind::E6).size(), 2u);
  EXPECT_EQ(basic_schmid(AlgebraKind::E7).size(), 3u);
  EXPECT_EQ(basic_schmid(AlgebraKind::E6)[0], halfvec({1, 1, 1, 1, 1, -1, -1, 1}));
  EXPECT_EQ(basic_schmid(AlgebraKind::E7)[2], (Weight{0, 0, 0, 0, 0, 2, -1, 1}));
}

TEST(Schmid, WeightOf) {
  EXPECT_EQ(weight_of(AlgebraKind::E6, {1, 0, 0}), halfvec({1, 1, 1, 1, 1, -1, -1, 1}));
  EXPECT_EQ(weight_of(AlgebraKind::E6, {2, 1, 0}), (Weight{1, 1, 1, 1, 2, -2, -2, 2}));
  EXPECT_EQ(weight_of(AlgebraKind::E7, {1, 1, 1}), (Weight{0, 0, 0, 0, 1, 3, -3, 3}));
}

TEST(Schmid, E7ClosedFormAndAdditivity) {
  for (std::int64_t a = 0; a <= 4; ++a)
    for (std::int64_t b = 0; b <= 4; ++b)
      for (std::int64_t c = 0; c <= 4; ++c) {
        if (a + b + c == 0) continue;
        const SchmidModule s{a, b, c};
        EXPECT_EQ(weight_of(AlgebraKind::E7, s), (Weight{0, 0, 0, 0, b, b + 2 * c, -a - b - c, a + b + c}));
        const SchmidModule t{c, a, b};
        if (t.a + t.b + t.c == 0) continue;
        EXPECT_EQ(weight_of(AlgebraKind::E7, s + t), weight_of(AlgebraKind::E7, s) + weight_of(AlgebraKind::E7, t));
        EXPECT_EQ(level(AlgebraKind::E7, s + t), level(AlgebraKind::E7, s) + level(AlgebraKind::E7, t));
      }
}

TEST(Schmid, Levels) {
  EXPECT_EQ(level(AlgebraKind::E6, basic_module(AlgebraKind::E6, 2)), 2);
  EXPECT_EQ(level(AlgebraKind::E7, basic_module(AlgebraKind::E7, 3)), 3);
  EXPECT_EQ(level(AlgebraKind::E7, {1, 1, 1}), 6);
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(level(AlgebraKind::E7, basic_module(AlgebraKind::E7, i)), i);
}

TEST(Schmid, Enumerate) {
  const std::vector<SchmidModule> e6{{1, 0, 0}, {2, 0, 0}, {0, 1, 0}};
  EXPECT_EQ(enumerate_up_to_level(AlgebraKind::E6, 2), e6);
  const std::vector<SchmidModule> e7{{1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {3, 0, 0}, {1, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(enumerate_up_to_level(AlgebraKind::E7, 3), e7);
  for (std::int64_t L = 1; L <= 30; ++L)
    EXPECT_EQ(static_cast<std::int64_t>(enumerate_up_to_level(AlgebraKind::E6, L).size()), L * L / 4 + L);
  EXPECT_THROW(enumerate_up_to_level(AlgebraKind::E6, 0), std::invalid_argument);
}

TEST(Schmid, EnumerationSortedByLevel) {
  const auto all = enumerate_up_to_level(AlgebraKind::E7, 15);
  for (std::size_t i = 1; i < all.size(); ++i) {
    const auto& p = all[i - 1];
    const auto& q = all[i];
    const auto lp = level(AlgebraKind::E7, p), lq = level(AlgebraKind::E7, q);
    ASSERT_TRUE(lp < lq || (lp == lq && (p.c < q.c || (p.c == q.c && p.b < q.b))));
  }
}

TEST(Schmid, Checks) {
  EXPECT_THROW(check_schmid(AlgebraKind::E6, {0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(check_schmid(AlgebraKind::E7, {0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(check_schmid(AlgebraKind::E7, {-1, 1, 0}), std::invalid_argument);
  EXPECT_THROW(basic_module(AlgebraKind::E6, 3), std::invalid_argument);
  EXPECT_EQ((SchmidModule{0, 1, 0}).str(AlgebraKind::E6), "s_{0,1}");
  EXPECT_EQ((SchmidModule{0, 0, 1}).str(AlgebraKind::E7), "s_{0,0,1}");
}
