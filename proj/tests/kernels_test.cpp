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

#include "ntrulab/kernels.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <random>
#include <string>
#include <vector>

#include "support/oracles.hpp"

namespace {

namespace kernels = ::ntrulab::kernels;
using ::ntrulab::testing::Coeffs;

Coeffs run(kernels::Isa isa, const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size(), -12345);
  kernels::cyclic_convolve(a, b, out, isa);
  return out;
}

TEST(KernelTest, ScalarMatchesSchoolbookOracle) {
  std::mt19937_64 gen(1);
  for (std::size_t n = 1; n <= 40; ++n) {
    const Coeffs a = ntrulab::testing::random_coeffs(n, -1000, 1000, gen);
    const Coeffs b = ntrulab::testing::random_coeffs(n, -1000, 1000, gen);
    Coeffs out(n);
    kernels::detail::cyclic_convolve_scalar(a, b, out);
    EXPECT_EQ(out, ntrulab::testing::schoolbook_fold(a, b)) << "n=" << n;
  }
}

TEST(KernelTest, ActiveIsaIsSupported) {
  EXPECT_TRUE(kernels::isa_supported(kernels::active_isa()));
  EXPECT_TRUE(kernels::isa_supported(kernels::Isa::kScalar));
}

class VectorKernelTest : public ::testing::TestWithParam<kernels::Isa> {
 protected:
  void SetUp() override {
    if (!kernels::isa_supported(GetParam())) {
      GTEST_SKIP() << kernels::isa_name(GetParam()) << " not available on this CPU";
    }
  }
};

// Every length up to a few blocks exercises the 16-wide body, the 4-wide loop
// and the scalar tail.
TEST_P(VectorKernelTest, BitIdenticalToScalarAcrossLengths) {
  std::mt19937_64 gen(2);
  for (std::size_t n = 1; n <= 70; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Coeffs a = ntrulab::testing::random_coeffs(n, -70000, 70000, gen);
      const Coeffs b = ntrulab::testing::random_coeffs(n, -70000, 70000, gen);
      ASSERT_EQ(run(GetParam(), a, b), run(kernels::Isa::kScalar, a, b)) << "n=" << n;
    }
  }
}

TEST_P(VectorKernelTest, BitIdenticalAtNtruSizes) {
  std::mt19937_64 gen(3);
  for (const std::size_t n : {107u, 167u, 251u, 503u}) {
    const Coeffs h = ntrulab::testing::random_coeffs(n, 0, 2047, gen);
    const Coeffs r = ntrulab::testing::random_coeffs(n, -1, 1, gen);
    ASSERT_EQ(run(GetParam(), h, r), run(kernels::Isa::kScalar, h, r));
    ASSERT_EQ(run(GetParam(), h, r), ntrulab::testing::schoolbook_fold(h, r));
  }
}

TEST_P(VectorKernelTest, Int32Extremes) {
  const std::int64_t lo = std::numeric_limits<std::int32_t>::min();
  const std::int64_t hi = std::numeric_limits<std::int32_t>::max();
  // Two products of magnitude <= 2^62 cannot overflow.
  for (const Coeffs& a : {Coeffs{lo, hi}, Coeffs{hi, hi}, Coeffs{lo, lo}, Coeffs{-1, hi}}) {
    for (const Coeffs& b : {Coeffs{lo, hi}, Coeffs{hi, -hi}, Coeffs{lo, 0}}) {
      EXPECT_EQ(run(GetParam(), a, b), run(kernels::Isa::kScalar, a, b));
    }
  }
}

TEST_P(VectorKernelTest, WideInputsFallBackToScalar) {
  std::mt19937_64 gen(4);
  const std::int64_t wide = std::int64_t{1} << 40;
  for (std::size_t n = 1; n <= 24; ++n) {
    Coeffs a = ntrulab::testing::random_coeffs(n, -3, 3, gen);
    const Coeffs b = ntrulab::testing::random_coeffs(n, -3, 3, gen);
    a[n / 2] = wide;
    EXPECT_EQ(run(GetParam(), a, b), ntrulab::testing::schoolbook_fold(a, b));
  }
}

INSTANTIATE_TEST_SUITE_P(AllIsas, VectorKernelTest,
                         ::testing::Values(kernels::Isa::kScalar, kernels::Isa::kAvx2),
                         [](const auto& info) {
                           return std::string(kernels::isa_name(info.param));
                         });

}  // namespace
