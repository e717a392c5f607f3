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

#include "ntrulab/ntru.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "ntrulab/error.hpp"
#include "ntrulab/ternary.hpp"

namespace ntrulab {

namespace {

std::string describe(std::int64_t n, std::int64_t p, std::int64_t q, std::int64_t d) {
  return "(N=" + std::to_string(n) + ", p=" + std::to_string(p) +
         ", q=" + std::to_string(q) + ", d=" + std::to_string(d) + ")";
}

// q == base^exponent with base prime; nullopt-like {0, 0} when q is neither
// prime nor a power of two.
std::pair<std::int64_t, unsigned> split_supported_q(std::int64_t q) {
  if (is_prime(q)) return {q, 1};
  if ((q & (q - 1)) == 0) {
    unsigned k = 0;
    for (std::int64_t v = q; v > 1; v >>= 1) ++k;
    return {2, k};
  }
  return {0, 0};
}

void check_rank(const NtruParams& params, const ConvPoly& a, const char* what) {
  if (a.rank() != params.n()) {
    throw Error(ErrorCode::kRankMismatch,
                std::string(what) + " has rank " + std::to_string(a.rank()) +
                    ", parameters need " + std::to_string(params.n()));
  }
}

bool canonical_mod(const ConvPoly& a, Modulus m) {
  for (const std::int64_t c : a.coeffs()) {
    if (c < 0 || c >= m.value()) return false;
  }
  return true;
}

}  // namespace

NtruParams NtruParams::validate(std::int64_t n, std::int64_t p, std::int64_t q,
                                std::int64_t d, DecryptionProfile profile) {
  const std::string who = describe(n, p, q, d);
  if (!is_prime(n)) {
    throw Error(ErrorCode::kNotPrimeN, "N must be prime " + who);
  }
  if (p < 2 || q < 2) {
    throw Error(ErrorCode::kInvalidModulus, "p and q must be at least 2 " + who);
  }
  if (d < 1) {
    throw Error(ErrorCode::kDegenerateWeight, "d must be at least 1 " + who);
  }
  if (2 * d + 1 > n) {
    throw Error(ErrorCode::kWeightTooLarge, "T(d+1,d) needs 2d+1 <= N " + who);
  }
  if (profile == DecryptionProfile::kGuaranteed) {
    const __int128 bound = static_cast<__int128>(6 * d + 1) * p;
    if (static_cast<__int128>(q) <= bound) {
      throw Error(ErrorCode::kDecryptionBoundViolation,
                  "q must exceed (6d+1)p = " +
                      std::to_string(static_cast<long long>(bound)) + " " + who);
    }
  }
  if (std::gcd(n, q) != 1 || std::gcd(p, q) != 1) {
    throw Error(ErrorCode::kGcdViolation, "need gcd(N,q) = gcd(p,q) = 1 " + who);
  }
  if (!is_prime(p)) {
    throw Error(ErrorCode::kUnsupportedModulus, "p must be prime " + who);
  }
  const auto [q_prime, q_exponent] = split_supported_q(q);
  if (q_prime == 0) {
    throw Error(ErrorCode::kUnsupportedModulus,
                "q must be prime or a power of two " + who);
  }
  // Keeps every convolution of a reduced operand by a ternary one inside
  // int64 and the inverters inside their range.
  if (q > (std::int64_t{1} << 20) || n > (std::int64_t{1} << 16)) {
    throw Error(ErrorCode::kUnsupportedModulus, "q or N beyond supported range " + who);
  }
  return NtruParams(static_cast<std::size_t>(n), Modulus(p), Modulus(q),
                    static_cast<std::size_t>(d), profile, q_prime, q_exponent);
}

NtruPublicKey::NtruPublicKey(const NtruParams& params, ConvPoly h)
    : params_(params), h_(std::move(h)) {
  if (h_.rank() != params_.n() || !canonical_mod(h_, params_.q())) {
    throw Error(ErrorCode::kInvalidKey, "h must have rank N and coefficients in [0, q)");
  }
  if (params_.q().reduce(evaluate_at_one(h_)) != 0) {
    throw Error(ErrorCode::kInvalidKey, "h(1) must vanish mod q");
  }
}

NtruSecretKey::NtruSecretKey(const NtruParams& params, ConvPoly f, ConvPoly f_p)
    : params_(params), f_(std::move(f)), f_p_(std::move(f_p)) {
  const std::size_t d = params_.d();
  if (f_.rank() != params_.n() || !is_member(f_, TernaryShape(params_.n(), d + 1, d))) {
    throw Error(ErrorCode::kInvalidKey, "f must lie in T(d+1,d)");
  }
  if (f_p_.rank() != params_.n() || !canonical_mod(f_p_, params_.p())) {
    throw Error(ErrorCode::kInvalidKey, "F_p must have rank N and coefficients in [0, p)");
  }
  if (reduce_mod(mul(f_, f_p_), params_.p()) != ConvPoly::one(params_.n())) {
    throw Error(ErrorCode::kInvalidKey, "f * F_p is not 1 mod p");
  }
}

bool is_valid_plaintext(const NtruParams& params, const ConvPoly& m) {
  if (m.rank() != params.n()) return false;
  const std::int64_t p = params.p().value();
  for (const std::int64_t c : m.coeffs()) {
    // c in (-p/2, p/2]  <=>  -p < 2c <= p
    if (2 * c <= -p || 2 * c > p) return false;
  }
  return true;
}

NtruPlaintext::NtruPlaintext(const NtruParams& params, ConvPoly m) : m_(std::move(m)) {
  check_rank(params, m_, "plaintext");
  if (!is_valid_plaintext(params, m_)) {
    throw Error(ErrorCode::kPlaintextOutOfRange,
                "plaintext coefficients must lie in (-p/2, p/2] for p = " +
                    std::to_string(params.p().value()));
  }
}

NtruCiphertext::NtruCiphertext(const NtruParams& params, ConvPoly e) : e_(std::move(e)) {
  if (e_.rank() != params.n() || !canonical_mod(e_, params.q())) {
    throw Error(ErrorCode::kInvalidCiphertext,
                "ciphertext must have rank N and coefficients in [0, q)");
  }
}

std::optional<ConvPoly> invert_mod_q(const ConvPoly& f, const NtruParams& params) {
  const Modulus base(params.q_prime());
  if (params.q_exponent() == 1) return invert_mod_prime(f, base);
  return invert_mod_prime_power(f, base, params.q_exponent());
}

KeygenTrace keygen_trace(const NtruParams& params, RandomSource& rng) {
  const std::size_t n = params.n();
  const std::size_t d = params.d();
  const TernaryShape f_shape(n, d + 1, d);

  for (unsigned attempt = 1; attempt <= kKeygenRetryCap; ++attempt) {
    ConvPoly f = sample_ternary(f_shape, rng);
    std::optional<ConvPoly> f_p = invert_mod_prime(f, params.p());
    if (!f_p) continue;
    std::optional<ConvPoly> f_q = invert_mod_q(f, params);
    if (!f_q) continue;

    ConvPoly g = sample_ternary(TernaryShape(n, d, d), rng);
    ConvPoly h = reduce_mod(mul(*f_q, g), params.q());
    return KeygenTrace{
        NtruKeyPair{NtruPublicKey(params, std::move(h)),
                    NtruSecretKey(params, std::move(f), std::move(*f_p))},
        std::move(g), std::move(*f_q), attempt};
  }
  throw Error(ErrorCode::kRetriesExhausted,
              "no invertible f after " + std::to_string(kKeygenRetryCap) + " draws");
}

NtruCiphertext encrypt(const NtruPublicKey& pk, const NtruPlaintext& m,
                       RandomSource& rng) {
  const NtruParams& params = pk.params();
  const ConvPoly r = sample_ternary(TernaryShape(params.n(), params.d(), params.d()), rng);
  return encrypt_with_r(pk, m, r);
}

NtruCiphertext encrypt_with_r(const NtruPublicKey& pk, const NtruPlaintext& m,
                              const ConvPoly& r) {
  const NtruParams& params = pk.params();
  // Re-checked here: the plaintext may have been built against other params.
  const NtruPlaintext message(params, m.m());
  if (r.rank() != params.n() ||
      !is_member(r, TernaryShape(params.n(), params.d(), params.d()))) {
    throw Error(ErrorCode::kBadBlindingPolynomial, "r must lie in T(d,d)");
  }
  const ConvPoly blinded = scale(mul(pk.h(), r), params.p().value());
  return NtruCiphertext(params, reduce_mod(add(blinded, message.m()), params.q()));
}

DecryptTrace decrypt_trace(const NtruSecretKey& sk, const NtruCiphertext& e) {
  const NtruParams& params = sk.params();
  if (e.e().rank() != params.n()) {
    throw Error(ErrorCode::kInvalidCiphertext, "ciphertext rank does not match key");
  }
  ConvPoly a = center_lift(reduce_mod(mul(sk.f(), e.e()), params.q()), params.q());
  ConvPoly b = center_lift(reduce_mod(mul(sk.f_p(), a), params.p()), params.p());
  return DecryptTrace{std::move(a), NtruPlaintext(params, std::move(b))};
}

}  // namespace ntrulab
