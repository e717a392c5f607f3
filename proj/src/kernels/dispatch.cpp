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

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "ntrulab/kernels.hpp"

namespace ntrulab::kernels {

namespace {

[[maybe_unused]] bool fits_int32(std::span<const std::int64_t> values) {
  return std::all_of(values.begin(), values.end(), [](std::int64_t v) {
    return v >= std::numeric_limits<std::int32_t>::min() &&
           v <= std::numeric_limits<std::int32_t>::max();
  });
}

Isa detect_isa() {
  if (const char* forced = std::getenv("NTRULAB_ISA")) {
    if (std::string(forced) == "scalar") return Isa::kScalar;
  }
  if (isa_supported(Isa::kAvx2)) return Isa::kAvx2;
  return Isa::kScalar;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(NTRULAB_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa isa = detect_isa();
  return isa;
}

void cyclic_convolve(std::span<const std::int64_t> a,
                     std::span<const std::int64_t> b,
                     std::span<std::int64_t> out, Isa isa) {
#if defined(NTRULAB_HAVE_AVX2)
  if (isa == Isa::kAvx2 && isa_supported(Isa::kAvx2) && fits_int32(a) &&
      fits_int32(b)) {
    detail::cyclic_convolve_avx2(a, b, out);
    return;
  }
#else
  (void)isa;
#endif
  detail::cyclic_convolve_scalar(a, b, out);
}

}  // namespace ntrulab::kernels
