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

#pragma once

#include <cstdint>
#include <random>

namespace ntrulab {

/// Seedable stream of uniform 64-bit words. Identical seeds give identical
/// streams on every platform: the engine is std::mt19937_64 and all range
/// reduction happens here rather than in implementation-defined standard
/// distributions. Move-only, since a copy would silently replay the stream.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  RandomSource(const RandomSource&) = delete;
  RandomSource& operator=(const RandomSource&) = delete;
  RandomSource(RandomSource&&) = default;
  RandomSource& operator=(RandomSource&&) = default;

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

  bool coin() { return (next_u64() >> 63) != 0; }

  /// An independent child stream whose seed is drawn from this one.
  RandomSource fork();

  /// Nondeterministic seed for runs that did not supply one.
  static std::uint64_t fresh_seed();

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace ntrulab
