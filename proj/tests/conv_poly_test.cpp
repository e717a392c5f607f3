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

#include "ntrulab/conv_poly.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "ntrulab/error.hpp"
#include "ntrulab/random_source.hpp"
#include "ntrulab/ternary.hpp"
#include "support/oracles.hpp"

namespace {

using ::ntrulab::ConvPoly;
using ::ntrulab::Error;
using ::ntrulab::ErrorCode;
using ::ntrulab::Modulus;
using ::ntrulab::testing::Coeffs;

ConvPoly P(Coeffs c) { return ConvPoly(std::move(c)); }

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no ntrulab::Error thrown";
  return ErrorCode::kIoError;
}

TEST(ConvPolyTest, RejectsRankZero) {
  EXPECT_EQ(code_of([] { ConvPoly p{Coeffs{}}; }), ErrorCode::kInvalidRank);
}

TEST(ConvPolyTest, ModulusMustBeAtLeastTwo) {
  EXPECT_EQ(code_of([] { Modulus m(1); }), ErrorCode::kInvalidModulus);
  EXPECT_EQ(Modulus(2).value(), 2);
}

TEST(ConvPolyTest, AddExamples) {
  EXPECT_EQ(P({1, 2, 3}) + P({0, 0, 0}), P({1, 2, 3}));
  EXPECT_EQ(P({1, -1, 0}) + P({-1, 1, 0}), P({0, 0, 0}));
  EXPECT_EQ(P({2, 5}) + P({3, -7}), P({5, -2}));
}

TEST(ConvPolyTest, RankMismatch) {
  EXPECT_EQ(code_of([] { (void)(P({1, 2}) + P({1, 2, 3})); }), ErrorCode::kRankMismatch);
  EXPECT_EQ(code_of([] { (void)(P({1, 2}) * P({1, 2, 3})); }), ErrorCode::kRankMismatch);
}

TEST(ConvPolyTest, MulIdentity) {
  const ConvPoly a = P({4, -3, 0, 9, 1});
  EXPECT_EQ(a * ConvPoly::one(5), a);
  EXPECT_EQ(ConvPoly::one(5) * a, a);
}

TEST(ConvPolyTest, MulWrapsExponents) {
  // (1 + x)(1 + x^2) = 1 + x + x^2 + x^3 and x^3 = 1.
  EXPECT_EQ(P({1, 1, 0}) * P({1, 0, 1}), P({2, 1, 1}));
}

TEST(ConvPolyTest, ProductOfBalancedTernariesSumsToZero) {
  ntrulab::RandomSource rng(7);
  const ntrulab::TernaryShape shape(7, 2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const ConvPoly c = ntrulab::sample_ternary(shape, rng) * ntrulab::sample_ternary(shape, rng);
    EXPECT_EQ(ntrulab::evaluate_at_one(c), 0);
  }
}

TEST(ConvPolyTest, ReduceModExamples) {
  EXPECT_EQ(reduce_mod(P({7, -1, 41}), Modulus(41)), P({7, 40, 0}));
  EXPECT_EQ(reduce_mod(P({0, 0, 0}), Modulus(3)), P({0, 0, 0}));
  EXPECT_EQ(reduce_mod(P({5, -5}), Modulus(3)), P({2, 1}));
}

TEST(ConvPolyTest, CenterLiftExamples) {
  EXPECT_EQ(center_lift(P({5}), Modulus(7)), P({-2}));
  EXPECT_EQ(center_lift(P({2}), Modulus(3)), P({-1}));
  EXPECT_EQ(center_lift(P({20, -20}), Modulus(41)), P({20, -20}));
  // 21 lies outside (-20.5, 20.5]; its representative is 21 - 41.
  EXPECT_EQ(center_lift(P({20, 21}), Modulus(41)), P({20, -20}));
}

TEST(ConvPolyTest, CenterLiftEvenModulusUsesHalfOpenInterval) {
  // (-4, 4] for m = 8: 4 stays, -4 becomes 4.
  EXPECT_EQ(center_lift(P({4, -4, 5, 3}), Modulus(8)), P({4, 4, -3, 3}));
}

TEST(ConvPolyTest, EvaluateAtOne) {
  EXPECT_EQ(evaluate_at_one(P({3, -1, 4})), 6);
  ntrulab::RandomSource rng(3);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(evaluate_at_one(sample_ternary(ntrulab::TernaryShape(11, 3, 3), rng)), 0);
    EXPECT_EQ(evaluate_at_one(sample_ternary(ntrulab::TernaryShape(11, 4, 3), rng)), 1);
  }
}

TEST(ConvPolyTest, MatchesSchoolbookOracleAndRingLaws) {
  std::mt19937_64 gen(20261019);
  for (const std::size_t n : {3u, 5u, 7u, 11u}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const Coeffs a = ntrulab::testing::random_coeffs(n, -50, 50, gen);
      const Coeffs b = ntrulab::testing::random_coeffs(n, -50, 50, gen);
      const Coeffs c = ntrulab::testing::random_coeffs(n, -50, 50, gen);
      const ConvPoly pa(a), pb(b), pc(c);
      ASSERT_EQ(pa * pb, ConvPoly(ntrulab::testing::schoolbook_fold(a, b))) << "n=" << n;
      ASSERT_EQ(pa * pb, pb * pa);
      ASSERT_EQ((pa * pb) * pc, pa * (pb * pc));
      ASSERT_EQ(pa * (pb + pc), pa * pb + pa * pc);
      ASSERT_EQ(evaluate_at_one(pa * pb), evaluate_at_one(pa) * evaluate_at_one(pb));
    }
  }
}

TEST(ConvPolyTest, LiftAndReduceCompose) {
  std::mt19937_64 gen(11);
  for (const std::int64_t m : {2, 3, 8, 41, 2048}) {
    const Modulus mod(m);
    for (int trial = 0; trial < 200; ++trial) {
      const ConvPoly a(ntrulab::testing::random_coeffs(9, -100000, 100000, gen));
      const ConvPoly lifted = center_lift(a, mod);
      EXPECT_EQ(center_lift(reduce_mod(a, mod), mod), lifted);
      EXPECT_EQ(reduce_mod(lifted, mod), reduce_mod(a, mod));
      EXPECT_EQ(center_lift(lifted, mod), lifted);
      for (const auto c : lifted.coeffs()) {
        EXPECT_GT(2 * c, -m);
        EXPECT_LE(2 * c, m);
      }
    }
  }
}

TEST(ConvPolyTest, DetectsOverflow) {
  const std::int64_t big = std::int64_t{1} << 40;
  EXPECT_EQ(code_of([&] { (void)(P({big, big}) * P({big, 1})); }),
            ErrorCode::kCoefficientOverflow);
  const std::int64_t max = std::numeric_limits<std::int64_t>::max();
  EXPECT_EQ(code_of([&] { (void)(P({max}) + P({1})); }), ErrorCode::kCoefficientOverflow);
  EXPECT_EQ(code_of([&] { (void)evaluate_at_one(P({max, 1})); }),
            ErrorCode::kCoefficientOverflow);
}

TEST(ConvPolyTest, TextForm) {
  EXPECT_EQ(to_string(P({0, -3, 12})), "[0,-3,12]");
  EXPECT_EQ(ntrulab::parse_poly(" [ 0, -3 ,\n12 ] "), P({0, -3, 12}));
  EXPECT_EQ(ntrulab::parse_poly("[5]"), P({5}));
  for (const char* bad : {"", "[]", "0,1", "[1,,2]", "[1,2", "[a]", "[1 2]", "[+-1]"}) {
    EXPECT_EQ(code_of([&] { (void)ntrulab::parse_poly(bad); }), ErrorCode::kParseError)
        << bad;
  }
  std::mt19937_64 gen(5);
  for (int i = 0; i < 50; ++i) {
    const ConvPoly a(ntrulab::testing::random_coeffs(1 + i % 13, -1000000, 1000000, gen));
    EXPECT_EQ(ntrulab::parse_poly(to_string(a)), a);
  }
}

}  // namespace
