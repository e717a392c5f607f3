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

// Scheme-agnostic adversaries.

#pragma once

#include <utility>

#include "ntrulab/games.hpp"

namespace ntrulab::games {

/// Fixed message pair, uniformly random guess. Calibrates the harness: its
/// success rate must sit at 1/2 against every scheme.
template <SchemeUnderTest S>
class CoinFlipAdversary {
 public:
  using Plaintext = typename S::Plaintext;

  CoinFlipAdversary(Plaintext m0, Plaintext m1) : m0_(std::move(m0)), m1_(std::move(m1)) {}

  std::pair<Plaintext, Plaintext> choose_messages(const typename S::PublicKey&,
                                                  Oracles<S>&, RandomSource&) const {
    return {m0_, m1_};
  }

  bool guess(const typename S::PublicKey&, const typename S::Ciphertext&, Oracles<S>&,
             RandomSource& coins) const {
    return coins.coin();
  }

 private:
  Plaintext m0_;
  Plaintext m1_;
};

/// Asks the encryption oracle for Enc(m0) after the challenge and answers 0
/// iff it equals the challenge. Wins every run against a deterministic
/// scheme; against a randomized one it degrades to chance.
template <SchemeUnderTest S>
class ReplayAdversary {
 public:
  using Plaintext = typename S::Plaintext;

  ReplayAdversary(Plaintext m0, Plaintext m1) : m0_(std::move(m0)), m1_(std::move(m1)) {}

  std::pair<Plaintext, Plaintext> choose_messages(const typename S::PublicKey&,
                                                  Oracles<S>&, RandomSource&) const {
    return {m0_, m1_};
  }

  bool guess(const typename S::PublicKey&, const typename S::Ciphertext& challenge,
             Oracles<S>& oracles, RandomSource&) const {
    return !(oracles.encrypt(m0_) == challenge);
  }

 private:
  Plaintext m0_;
  Plaintext m1_;
};

}  // namespace ntrulab::games
