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

#include "ntrulab/classical_schemes.hpp"

#include <array>
#include <numeric>

namespace ntrulab::games {

using classical::kAlphabetSize;
using classical::PermutationKey;
using classical::ShiftKey;
using classical::Z26Text;

std::pair<ShiftCipherScheme::PublicKey, ShiftKey> ShiftCipherScheme::keygen(
    RandomSource& rng) const {
  const ShiftKey key(static_cast<int>(rng.uniform_below(kAlphabetSize)));
  return {PublicKey(key), key};
}

Z26Text ShiftCipherScheme::encrypt(const PublicKey& pk, const Z26Text& m,
                                   RandomSource& /*rng*/) const {
  return classical::shift_encrypt(m, pk.key_);
}

std::optional<Z26Text> ShiftCipherScheme::decrypt(const ShiftKey& sk,
                                                  const Z26Text& c) const {
  return classical::shift_decrypt(c, sk);
}

bool ShiftCipherScheme::is_valid_plaintext(const PublicKey&, const Z26Text& m) const {
  return !m.empty();
}

std::pair<SubstitutionCipherScheme::PublicKey, PermutationKey>
SubstitutionCipherScheme::keygen(RandomSource& rng) const {
  std::array<int, kAlphabetSize> image{};
  std::iota(image.begin(), image.end(), 0);
  for (std::size_t i = image.size() - 1; i > 0; --i) {
    std::swap(image[i], image[rng.uniform_below(i + 1)]);
  }
  const PermutationKey key(image);
  return {PublicKey(key), key};
}

Z26Text SubstitutionCipherScheme::encrypt(const PublicKey& pk, const Z26Text& m,
                                          RandomSource& /*rng*/) const {
  return classical::substitution_encrypt(m, pk.key_);
}

std::optional<Z26Text> SubstitutionCipherScheme::decrypt(const PermutationKey& sk,
                                                         const Z26Text& c) const {
  return classical::substitution_decrypt(c, sk);
}

bool SubstitutionCipherScheme::is_valid_plaintext(const PublicKey&,
                                                  const Z26Text& m) const {
  return !m.empty();
}

}  // namespace ntrulab::games
