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

#include <cstddef>

#include "ntrulab/kernels.hpp"

namespace ntrulab::kernels::detail {

void cyclic_convolve_scalar(std::span<const std::int64_t> a,
                            std::span<const std::int64_t> b,
                            std::span<std::int64_t> out) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) out[k] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t ai = a[i];
    if (ai == 0) continue;
    // k >= i: b index k - i;  k < i: b index k - i + n.
    for (std::size_t k = i; k < n; ++k) out[k] += ai * b[k - i];
    for (std::size_t k = 0; k < i; ++k) out[k] += ai * b[k + n - i];
  }
}

}  // namespace ntrulab::kernels::detail
