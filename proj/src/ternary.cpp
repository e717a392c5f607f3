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

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ntrulab/error.hpp"

namespace ntrulab {

TernaryShape::TernaryShape(std::size_t rank, std::size_t plus_ones,
                           std::size_t minus_ones)
    : rank_(rank), plus_ones_(plus_ones), minus_ones_(minus_ones) {
  if (rank == 0) throw Error(ErrorCode::kInvalidRank, "rank must be at least 1");
  if (plus_ones > rank || minus_ones > rank - plus_ones) {
    throw Error(ErrorCode::kShapeTooLarge,
                "T(" + std::to_string(plus_ones) + "," + std::to_string(minus_ones) +
                    ") does not fit in rank " + std::to_string(rank));
  }
}

ConvPoly sample_ternary(const TernaryShape& shape, RandomSource& rng) {
  std::vector<std::int64_t> coeffs(shape.rank(), 0);
  std::fill_n(coeffs.begin(), shape.plus_ones(), 1);
  std::fill_n(coeffs.begin() + static_cast<std::ptrdiff_t>(shape.plus_ones()),
              shape.minus_ones(), -1);
  for (std::size_t i = coeffs.size() - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_below(i + 1));
    std::swap(coeffs[i], coeffs[j]);
  }
  return ConvPoly(std::move(coeffs));
}

bool is_member(const ConvPoly& a, const TernaryShape& shape) {
  if (a.rank() != shape.rank()) {
    throw Error(ErrorCode::kRankMismatch,
                "polynomial rank " + std::to_string(a.rank()) + ", shape rank " +
                    std::to_string(shape.rank()));
  }
  std::size_t plus = 0;
  std::size_t minus = 0;
  for (const std::int64_t c : a.coeffs()) {
    if (c == 1) {
      ++plus;
    } else if (c == -1) {
      ++minus;
    } else if (c != 0) {
      return false;
    }
  }
  return plus == shape.plus_ones() && minus == shape.minus_ones();
}

}  // namespace ntrulab
