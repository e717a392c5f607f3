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

// The shift and substitution ciphers adapted to the public-key game harness.
// The "public key" is a sealed handle: the scheme can encrypt with it, the
// adversary can pass it around but cannot read the key inside.

#pragma once

#include <optional>
#include <utility>

#include "ntrulab/classical.hpp"
#include "ntrulab/games.hpp"

namespace ntrulab::games {

template <typename Key, typename Owner>
class SealedKey {
 public:
  friend bool operator==(const SealedKey&, const SealedKey&) = default;

 private:
  friend Owner;
  explicit SealedKey(Key key) : key_(std::move(key)) {}
  Key key_;
};

class ShiftCipherScheme {
 public:
  using SecretKey = classical::ShiftKey;
  using PublicKey = SealedKey<classical::ShiftKey, ShiftCipherScheme>;
  using Plaintext = classical::Z26Text;
  using Ciphertext = classical::Z26Text;

  std::pair<PublicKey, SecretKey> keygen(RandomSource& rng) const;
  Ciphertext encrypt(const PublicKey& pk, const Plaintext& m, RandomSource& rng) const;
  std::optional<Plaintext> decrypt(const SecretKey& sk, const Ciphertext& c) const;
  bool is_valid_plaintext(const PublicKey& pk, const Plaintext& m) const;
};

class SubstitutionCipherScheme {
 public:
  using SecretKey = classical::PermutationKey;
  using PublicKey = SealedKey<classical::PermutationKey, SubstitutionCipherScheme>;
  using Plaintext = classical::Z26Text;
  using Ciphertext = classical::Z26Text;

  /// Uniform permutation by Fisher-Yates.
  std::pair<PublicKey, SecretKey> keygen(RandomSource& rng) const;
  Ciphertext encrypt(const PublicKey& pk, const Plaintext& m, RandomSource& rng) const;
  std::optional<Plaintext> decrypt(const SecretKey& sk, const Ciphertext& c) const;
  bool is_valid_plaintext(const PublicKey& pk, const Plaintext& m) const;
};

}  // namespace ntrulab::games
