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

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <cstddef>
#include <vector>

#include "ntrulab/kernels.hpp"

namespace ntrulab::kernels::detail {

namespace {

constexpr std::size_t kLanes = 4;
constexpr std::size_t kBlock = 4 * kLanes;

}  // namespace

// Works on a doubled copy of b so that b[(k - i) mod n] == wrapped[n - i + k]
// is contiguous in k. Each output block of 16 coefficients stays in four
// accumulators while i sweeps the whole of a. _mm256_mul_epi32 multiplies the
// sign-extended low halves, which is exact because every input fits in int32.
void cyclic_convolve_avx2(std::span<const std::int64_t> a,
                          std::span<const std::int64_t> b,
                          std::span<std::int64_t> out) {
  const std::size_t n = a.size();
  std::vector<std::int64_t> wrapped(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    wrapped[j] = b[j];
    wrapped[j + n] = b[j];
  }
  const std::int64_t* base = wrapped.data() + n;

  std::size_t k0 = 0;
  for (; k0 + kBlock <= n; k0 += kBlock) {
    __m256i acc0 = _mm256_setzero_si256();
    __m256i acc1 = _mm256_setzero_si256();
    __m256i acc2 = _mm256_setzero_si256();
    __m256i acc3 = _mm256_setzero_si256();
    for (std::size_t i = 0; i < n; ++i) {
      const __m256i ai = _mm256_set1_epi64x(a[i]);
      const std::int64_t* src = base - i + k0;
      const auto load = [src](std::size_t off) {
        return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + off));
      };
      acc0 = _mm256_add_epi64(acc0, _mm256_mul_epi32(ai, load(0)));
      acc1 = _mm256_add_epi64(acc1, _mm256_mul_epi32(ai, load(4)));
      acc2 = _mm256_add_epi64(acc2, _mm256_mul_epi32(ai, load(8)));
      acc3 = _mm256_add_epi64(acc3, _mm256_mul_epi32(ai, load(12)));
    }
    auto* dst = reinterpret_cast<__m256i*>(out.data() + k0);
    _mm256_storeu_si256(dst + 0, acc0);
    _mm256_storeu_si256(dst + 1, acc1);
    _mm256_storeu_si256(dst + 2, acc2);
    _mm256_storeu_si256(dst + 3, acc3);
  }

  for (; k0 + kLanes <= n; k0 += kLanes) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t i = 0; i < n; ++i) {
      const __m256i ai = _mm256_set1_epi64x(a[i]);
      const __m256i bv = _mm256_loadu_si256(
          reinterpret_cast<const __m256i*>(base - i + k0));
      acc = _mm256_add_epi64(acc, _mm256_mul_epi32(ai, bv));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + k0), acc);
  }

  for (; k0 < n; ++k0) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += a[i] * base[k0 - i];
    out[k0] = sum;
  }
}

}  // namespace ntrulab::kernels::detail
