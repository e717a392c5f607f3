/*
 * Copyright 2026 The ntrulab Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ntrulab/ternary.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "ntrulab/error.hpp"
#include "support/oracles.hpp"

namespace {

using ::ntrulab::ConvPoly;
using ::ntrulab::RandomSource;
using ::ntrulab::TernaryShape;
using ::ntrulab::testing::Coeffs;

Coeffs as_vec(const ConvPoly& a) { return {a.coeffs().begin(), a.coeffs().end()}; }

TEST(TernaryTest, EmptyShapeGivesZero) {
  RandomSource rng(1);
  EXPECT_EQ(sample_ternary(TernaryShape(5, 0, 0), rng), ConvPoly::zero(5));
}

TEST(TernaryTest, ShapeTooLarge) {
  try {
    TernaryShape(7, 4, 4);
    FAIL();
  } catch (const ntrulab::Error& e) {
    EXPECT_EQ(e.code(), ntrulab::ErrorCode::kShapeTooLarge);
  }
  EXPECT_NO_THROW(TernaryShape(7, 4, 3));
  EXPECT_NO_THROW(TernaryShape(7, 7, 0));
}

TEST(TernaryTest, IsMemberExamples) {
  EXPECT_TRUE(is_member(ConvPoly({1, -1, 0}), TernaryShape(3, 1, 1)));
  EXPECT_FALSE(is_member(ConvPoly({2, 0, 0}), TernaryShape(3, 1, 0)));
  EXPECT_FALSE(is_member(ConvPoly({1, 1, 0}), TernaryShape(3, 1, 1)));
  EXPECT_FALSE(is_member(ConvPoly({1, -1, 0}), TernaryShape(3, 1, 0)));
  try {
    (void)is_member(ConvPoly({1, -1}), TernaryShape(3, 1, 1));
    FAIL();
  } catch (const ntrulab::Error& e) {
    EXPECT_EQ(e.code(), ntrulab::ErrorCode::kRankMismatch);
  }
}

TEST(TernaryTest, SampledPolynomialsAreMembers) {
  RandomSource rng(42);
  for (int draw = 0; draw < 1000; ++draw) {
    const std::size_t n = 3 + static_cast<std::size_t>(draw % 40);
    const std::size_t d1 = static_cast<std::size_t>(draw) % (n / 2 + 1);
    const std::size_t d2 = static_cast<std::size_t>(draw / 3) % (n - d1 + 1);
    const TernaryShape shape(n, d1, d2);
    const ConvPoly a = sample_ternary(shape, rng);
    const auto counted = ntrulab::testing::count_ternary(as_vec(a));
    ASSERT_EQ(counted.plus, d1);
    ASSERT_EQ(counted.minus, d2);
    ASSERT_EQ(counted.other, 0u);
    ASSERT_TRUE(is_member(a, shape));
    ASSERT_EQ(evaluate_at_one(a),
              static_cast<std::int64_t>(d1) - static_cast<std::int64_t>(d2));
  }
}

TEST(TernaryTest, StandardShapes) {
  RandomSource rng(5);
  EXPECT_EQ(evaluate_at_one(sample_ternary(TernaryShape(7, 2, 2), rng)), 0);
  EXPECT_EQ(evaluate_at_one(sample_ternary(TernaryShape(7, 3, 2), rng)), 1);
}

// T(1,1) with n = 3 has 6 members; each should get 1/6 of the draws to within
// 5% relative.
TEST(TernaryTest, UniformOverSmallSet) {
  RandomSource rng(60000);
  std::map<Coeffs, int> counts;
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) ++counts[as_vec(sample_ternary(TernaryShape(3, 1, 1), rng))];
  ASSERT_EQ(counts.size(), 6u);
  for (const auto& [poly, count] : counts) {
    EXPECT_NEAR(count, draws / 6.0, 0.05 * draws / 6.0) << ConvPoly(poly);
  }
}

TEST(TernaryTest, SameSeedSameDraws) {
  RandomSource a(77), b(77), c(78);
  const TernaryShape shape(31, 10, 9);
  std::set<Coeffs> differing;
  for (int i = 0; i < 20; ++i) {
    const ConvPoly x = sample_ternary(shape, a);
    EXPECT_EQ(x, sample_ternary(shape, b));
    if (!(x == sample_ternary(shape, c))) differing.insert(as_vec(x));
  }
  EXPECT_FALSE(differing.empty());
}

TEST(RandomSourceTest, UniformBelowStaysInRangeAndCoversIt) {
  RandomSource rng(9);
  for (const std::uint64_t bound : {1u, 2u, 3u, 26u, 1000u}) {
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 20000; ++i) {
      const std::uint64_t v = rng.uniform_below(bound);
      ASSERT_LT(v, bound);
      seen.insert(v);
    }
    EXPECT_EQ(seen.size(), bound);
  }
}

TEST(RandomSourceTest, ForkIsDeterministicAndDistinct) {
  RandomSource a(1), b(1);
  RandomSource fa = a.fork();
  RandomSource fb = b.fork();
  EXPECT_EQ(fa.seed(), fb.seed());
  EXPECT_EQ(fa.next_u64(), fb.next_u64());
  RandomSource fa2 = a.fork();
  EXPECT_NE(fa.seed(), fa2.seed());
}

}  // namespace
