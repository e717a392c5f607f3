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

// Textbook NTRU over R = Z[x]/(x^N - 1): key generation, encryption and
// decryption with public parameters (N, p, q, d).
//
//   keygen:   f in T(d+1, d), g in T(d, d), F_p = f^-1 mod p, F_q = f^-1 mod q,
//             h = F_q * g mod q.  Public h, secret (f, F_p).
//   encrypt:  r in T(d, d), e = p * h * r + m mod q.
//   decrypt:  a = center_lift(f * e mod q), b = center_lift(F_p * a mod p).
//
// With q > (6d + 1) p every coefficient of p*g*r + f*m is at most (3d + 1/2) p
// in absolute value, which is below q/2, so a equals that polynomial over Z
// and b == m exactly.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "ntrulab/conv_poly.hpp"
#include "ntrulab/random_source.hpp"

namespace ntrulab {

enum class DecryptionProfile {
  /// Enforces q > (6d + 1) p; decryption never fails.
  kGuaranteed,
  /// Skips the bound; decryption may silently return a wrong plaintext.
  kUnchecked,
};

/// Resamples of f allowed before keygen gives up with RetriesExhausted.
inline constexpr unsigned kKeygenRetryCap = 128;

class NtruParams {
 public:
  /// Checks, in order: N prime (NotPrimeN); p, q >= 2 (InvalidModulus);
  /// d >= 1 (DegenerateWeight); 2d + 1 <= N (WeightTooLarge);
  /// q > (6d + 1) p in the guaranteed profile (DecryptionBoundViolation);
  /// gcd(N, q) = gcd(p, q) = 1 (GcdViolation); p prime and q prime or a
  /// power of two (UnsupportedModulus). The first failure is thrown.
  static NtruParams validate(std::int64_t n, std::int64_t p, std::int64_t q,
                             std::int64_t d,
                             DecryptionProfile profile = DecryptionProfile::kGuaranteed);

  std::size_t n() const noexcept { return n_; }
  Modulus p() const noexcept { return p_; }
  Modulus q() const noexcept { return q_; }
  std::size_t d() const noexcept { return d_; }
  DecryptionProfile profile() const noexcept { return profile_; }

  /// q == q_prime()^q_exponent().
  std::int64_t q_prime() const noexcept { return q_prime_; }
  unsigned q_exponent() const noexcept { return q_exponent_; }

  /// (3d + 1/2) p, doubled to stay integral: 2 * max|a| <= (6d + 1) p.
  std::int64_t twice_coefficient_bound() const noexcept {
    return (6 * static_cast<std::int64_t>(d_) + 1) * p_.value();
  }

  /// Same (N, p, q, d); the profile is not part of the identity.
  friend bool operator==(const NtruParams& a, const NtruParams& b) {
    return a.n_ == b.n_ && a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_;
  }

 private:
  NtruParams(std::size_t n, Modulus p, Modulus q, std::size_t d,
             DecryptionProfile profile, std::int64_t q_prime, unsigned q_exponent)
      : n_(n), p_(p), q_(q), d_(d), profile_(profile),
        q_prime_(q_prime), q_exponent_(q_exponent) {}

  std::size_t n_;
  Modulus p_;
  Modulus q_;
  std::size_t d_;
  DecryptionProfile profile_;
  std::int64_t q_prime_;
  unsigned q_exponent_;
};

class NtruPublicKey {
 public:
  /// Throws InvalidKey unless h has rank N, coefficients in [0, q) and
  /// h(1) == 0 mod q.
  NtruPublicKey(const NtruParams& params, ConvPoly h);

  const NtruParams& params() const noexcept { return params_; }
  const ConvPoly& h() const noexcept { return h_; }

  friend bool operator==(const NtruPublicKey&, const NtruPublicKey&) = default;

 private:
  NtruParams params_;
  ConvPoly h_;
};

class NtruSecretKey {
 public:
  /// Throws InvalidKey unless f is in T(d+1, d), f_p is canonical mod p and
  /// f * f_p == 1 mod p.
  NtruSecretKey(const NtruParams& params, ConvPoly f, ConvPoly f_p);

  const NtruParams& params() const noexcept { return params_; }
  const ConvPoly& f() const noexcept { return f_; }
  const ConvPoly& f_p() const noexcept { return f_p_; }

  friend bool operator==(const NtruSecretKey&, const NtruSecretKey&) = default;

 private:
  NtruParams params_;
  ConvPoly f_;
  ConvPoly f_p_;
};

/// A message polynomial with every coefficient in (-p/2, p/2].
class NtruPlaintext {
 public:
  /// Throws RankMismatch or PlaintextOutOfRange.
  NtruPlaintext(const NtruParams& params, ConvPoly m);

  const ConvPoly& m() const noexcept { return m_; }

  friend bool operator==(const NtruPlaintext&, const NtruPlaintext&) = default;

 private:
  ConvPoly m_;
};

/// A ciphertext polynomial with every coefficient in [0, q).
class NtruCiphertext {
 public:
  /// Throws InvalidCiphertext on a rank mismatch or a noncanonical coefficient.
  NtruCiphertext(const NtruParams& params, ConvPoly e);

  const ConvPoly& e() const noexcept { return e_; }

  friend bool operator==(const NtruCiphertext&, const NtruCiphertext&) = default;

 private:
  ConvPoly e_;
};

struct NtruKeyPair {
  NtruPublicKey public_key;
  NtruSecretKey secret_key;
};

/// Key generation with the intermediates that never leave the key owner.
struct KeygenTrace {
  NtruKeyPair keys;
  ConvPoly g;
  ConvPoly f_q;
  unsigned attempts;
};

bool is_valid_plaintext(const NtruParams& params, const ConvPoly& m);

/// f^-1 in R_q, through the prime or prime-power inverter as q requires.
std::optional<ConvPoly> invert_mod_q(const ConvPoly& f, const NtruParams& params);

KeygenTrace keygen_trace(const NtruParams& params, RandomSource& rng);

inline NtruKeyPair keygen(const NtruParams& params, RandomSource& rng) {
  return keygen_trace(params, rng).keys;
}

/// Draws r from T(d, d) and calls encrypt_with_r.
NtruCiphertext encrypt(const NtruPublicKey& pk, const NtruPlaintext& m,
                       RandomSource& rng);

/// Throws BadBlindingPolynomial unless r is in T(d, d).
NtruCiphertext encrypt_with_r(const NtruPublicKey& pk, const NtruPlaintext& m,
                              const ConvPoly& r);

struct DecryptTrace {
  /// f * e mod q, center lifted into (-q/2, q/2].
  ConvPoly a_lifted;
  NtruPlaintext b;
};

DecryptTrace decrypt_trace(const NtruSecretKey& sk, const NtruCiphertext& e);

inline NtruPlaintext decrypt(const NtruSecretKey& sk, const NtruCiphertext& e) {
  return decrypt_trace(sk, e).b;
}

}  // namespace ntrulab
