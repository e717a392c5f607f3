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

// Textbook NTRU as a game target, and the x = 1 evaluation distinguisher.

#pragma once

#include <optional>
#include <utility>

#include "ntrulab/conv_poly.hpp"
#include "ntrulab/games.hpp"
#include "ntrulab/ntru.hpp"

namespace ntrulab::games {

class NtruScheme {
 public:
  using PublicKey = NtruPublicKey;
  using SecretKey = NtruSecretKey;
  using Plaintext = ConvPoly;
  using Ciphertext = NtruCiphertext;

  explicit NtruScheme(const NtruParams& params) : params_(params) {}

  const NtruParams& params() const noexcept { return params_; }

  std::pair<PublicKey, SecretKey> keygen(RandomSource& rng) const;
  Ciphertext encrypt(const PublicKey& pk, const Plaintext& m, RandomSource& rng) const;
  std::optional<Plaintext> decrypt(const SecretKey& sk, const Ciphertext& c) const;
  bool is_valid_plaintext(const PublicKey& pk, const Plaintext& m) const;

 private:
  NtruParams params_;
};

/// Every ciphertext satisfies e(1) == m(1) mod q, because g(1) = r(1) = 0 for
/// ternary polynomials in T(d, d). Choosing m0 = 0 and m1 = 1 makes the two
/// candidates differ at x = 1, so evaluating the challenge there reveals b.
class NtruCpaAdversary {
 public:
  std::pair<ConvPoly, ConvPoly> choose_messages(const NtruPublicKey& pk,
                                                Oracles<NtruScheme>& oracles,
                                                RandomSource& coins) const;

  bool guess(const NtruPublicKey& pk, const NtruCiphertext& challenge,
             Oracles<NtruScheme>& oracles, RandomSource& coins) const;
};

inline NtruCpaAdversary ntru_cpa_adversary() { return {}; }

}  // namespace ntrulab::games
