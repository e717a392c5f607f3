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

#include "ntrulab/ntru_game.hpp"

namespace ntrulab::games {

std::pair<NtruPublicKey, NtruSecretKey> NtruScheme::keygen(RandomSource& rng) const {
  NtruKeyPair keys = ntrulab::keygen(params_, rng);
  return {std::move(keys.public_key), std::move(keys.secret_key)};
}

NtruCiphertext NtruScheme::encrypt(const NtruPublicKey& pk, const ConvPoly& m,
                                   RandomSource& rng) const {
  return ntrulab::encrypt(pk, NtruPlaintext(pk.params(), m), rng);
}

std::optional<ConvPoly> NtruScheme::decrypt(const NtruSecretKey& sk,
                                            const NtruCiphertext& c) const {
  return ntrulab::decrypt(sk, c).m();
}

bool NtruScheme::is_valid_plaintext(const NtruPublicKey& pk, const ConvPoly& m) const {
  return ntrulab::is_valid_plaintext(pk.params(), m);
}

std::pair<ConvPoly, ConvPoly> NtruCpaAdversary::choose_messages(
    const NtruPublicKey& pk, Oracles<NtruScheme>& /*oracles*/,
    RandomSource& /*coins*/) const {
  const std::size_t n = pk.params().n();
  return {ConvPoly::zero(n), ConvPoly::one(n)};
}

bool NtruCpaAdversary::guess(const NtruPublicKey& pk, const NtruCiphertext& challenge,
                             Oracles<NtruScheme>& /*oracles*/,
                             RandomSource& /*coins*/) const {
  const Modulus q = pk.params().q();
  return q.reduce(evaluate_at_one(challenge.e())) == q.reduce(1);
}

}  // namespace ntrulab::games
