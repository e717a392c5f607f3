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

// Inner-loop kernels for the convolution ring. Every kernel has a scalar
// reference implementation; vector variants are selected at runtime and must
// produce bit-identical output.

#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace ntrulab::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

// True when this binary carries the variant and the running CPU can execute it.
bool isa_supported(Isa isa);

// Widest supported variant. The environment variable NTRULAB_ISA=scalar pins
// the scalar reference; the choice is made once per process.
Isa active_isa();

// out[k] = sum over i of a[i] * b[(k - i) mod n], with n = a.size().
//
// Requires a.size() == b.size() == out.size() > 0 and that no partial sum
// overflows int64 (the ring layer checks this before calling). The AVX2
// variant additionally needs every input to fit in int32; inputs outside that
// range are routed to the scalar kernel.
void cyclic_convolve(std::span<const std::int64_t> a,
                     std::span<const std::int64_t> b,
                     std::span<std::int64_t> out, Isa isa);

inline void cyclic_convolve(std::span<const std::int64_t> a,
                            std::span<const std::int64_t> b,
                            std::span<std::int64_t> out) {
  cyclic_convolve(a, b, out, active_isa());
}

namespace detail {

void cyclic_convolve_scalar(std::span<const std::int64_t> a,
                            std::span<const std::int64_t> b,
                            std::span<std::int64_t> out);

#if defined(NTRULAB_HAVE_AVX2)
void cyclic_convolve_avx2(std::span<const std::int64_t> a,
                          std::span<const std::int64_t> b,
                          std::span<std::int64_t> out);
#endif

}  // namespace detail
}  // namespace ntrulab::kernels
