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

// Ternary polynomials T(d1, d2): exactly d1 coefficients equal to +1, d2 equal
// to -1, and the rest zero.

#pragma once

#include <cstddef>

#include "ntrulab/conv_poly.hpp"
#include "ntrulab/random_source.hpp"

namespace ntrulab {

class TernaryShape {
 public:
  /// Throws ShapeTooLarge when plus_ones + minus_ones > rank, InvalidRank
  /// when rank is zero.
  TernaryShape(std::size_t rank, std::size_t plus_ones, std::size_t minus_ones);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t plus_ones() const noexcept { return plus_ones_; }
  std::size_t minus_ones() const noexcept { return minus_ones_; }

  friend bool operator==(const TernaryShape&, const TernaryShape&) = default;

 private:
  std::size_t rank_;
  std::size_t plus_ones_;
  std::size_t minus_ones_;
};

/// Uniform draw from T(d1, d2) via a Fisher-Yates shuffle of the coefficient
/// multiset.
ConvPoly sample_ternary(const TernaryShape& shape, RandomSource& rng);

/// Throws RankMismatch when a.rank() != shape.rank().
bool is_member(const ConvPoly& a, const TernaryShape& shape);

}  // namespace ntrulab
