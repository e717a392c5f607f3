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

// Indistinguishability experiments (IND-CPA, IND-CCA1, IND-CCA2) over any
// scheme and adversary that satisfy the concepts below.
//
// One run:
//   1. keygen
//   2. the adversary picks m0 != m1, with oracle access
//   3. hidden bit b, challenge c = Enc(pk, m_b)
//   4. the adversary outputs b', with oracle access; in CCA runs the
//      decryption oracle refuses c itself (CCA1 closes it entirely)
//   5. win iff b' == b
//
// All randomness of a run, including the adversary's coins, is forked from
// the RandomSource handed to the runner, so a master seed replays a whole
// batch exactly.

#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ntrulab/error.hpp"
#include "ntrulab/random_source.hpp"

namespace ntrulab::games {

template <typename S>
concept SchemeUnderTest =
    std::equality_comparable<typename S::Plaintext> &&
    std::equality_comparable<typename S::Ciphertext> &&
    requires(const S& scheme, RandomSource& rng, const typename S::PublicKey& pk,
             const typename S::SecretKey& sk, const typename S::Plaintext& m,
             const typename S::Ciphertext& c) {
      { scheme.keygen(rng) }
          -> std::same_as<std::pair<typename S::PublicKey, typename S::SecretKey>>;
      { scheme.encrypt(pk, m, rng) } -> std::same_as<typename S::Ciphertext>;
      { scheme.decrypt(sk, c) } -> std::same_as<std::optional<typename S::Plaintext>>;
      { scheme.is_valid_plaintext(pk, m) } -> std::convertible_to<bool>;
    };

enum class GameKind { kCpa, kCca1, kCca2 };

enum class OracleKind { kEncrypt, kDecrypt };

enum class Phase { kBeforeChallenge, kAfterChallenge };

enum class OracleStatus {
  kAnswered,
  /// Decryption of the challenge ciphertext itself.
  kRefusedChallenge,
  /// Decryption requested after the challenge in a CCA1 run.
  kClosed,
  /// Decryption requested in a CPA run.
  kUnavailable,
  /// The scheme rejected the ciphertext.
  kDecryptionFailed,
};

struct OracleEvent {
  OracleKind kind;
  Phase phase;
  OracleStatus status;

  friend bool operator==(const OracleEvent&, const OracleEvent&) = default;
};

template <SchemeUnderTest S>
struct DecryptReply {
  OracleStatus status;
  std::optional<typename S::Plaintext> plaintext;
};

template <SchemeUnderTest S>
class Oracles;

template <SchemeUnderTest S>
struct GameOutcome {
  GameKind kind;
  bool hidden_bit;
  bool guess;
  bool win;
  typename S::Plaintext m0;
  typename S::Plaintext m1;
  typename S::Ciphertext challenge;
  /// Every oracle request in order, answered or not.
  std::vector<OracleEvent> oracle_events;

  std::size_t count(OracleKind kind_filter) const {
    std::size_t n = 0;
    for (const auto& e : oracle_events) n += e.kind == kind_filter ? 1 : 0;
    return n;
  }
  std::size_t encrypt_calls() const { return count(OracleKind::kEncrypt); }
  std::size_t decrypt_calls() const { return count(OracleKind::kDecrypt); }
  std::size_t refusals() const {
    std::size_t n = 0;
    for (const auto& e : oracle_events) {
      n += e.status == OracleStatus::kRefusedChallenge ? 1 : 0;
    }
    return n;
  }
};

/// Oracle handles given to the adversary for the duration of one run.
template <SchemeUnderTest S>
class Oracles {
 public:
  using PublicKey = typename S::PublicKey;
  using SecretKey = typename S::SecretKey;
  using Plaintext = typename S::Plaintext;
  using Ciphertext = typename S::Ciphertext;

  Oracles(const S& scheme, const PublicKey& pk, const SecretKey& sk,
          GameKind kind, RandomSource rng)
      : scheme_(scheme), pk_(pk), sk_(sk), kind_(kind), rng_(std::move(rng)) {}

  Oracles(const Oracles&) = delete;
  Oracles& operator=(const Oracles&) = delete;

  /// Enc_pk(m) with fresh oracle randomness. Throws
  /// AdversaryContractViolation for an invalid plaintext.
  Ciphertext encrypt(const Plaintext& m) {
    if (!scheme_.is_valid_plaintext(pk_, m)) {
      throw Error(ErrorCode::kAdversaryContractViolation,
                  "encryption oracle queried with an invalid plaintext");
    }
    events_.push_back({OracleKind::kEncrypt, phase(), OracleStatus::kAnswered});
    return scheme_.encrypt(pk_, m, rng_);
  }

  DecryptReply<S> decrypt(const Ciphertext& c) {
    const OracleStatus status = decrypt_status(c);
    if (status != OracleStatus::kAnswered) {
      events_.push_back({OracleKind::kDecrypt, phase(), status});
      return {status, std::nullopt};
    }
    std::optional<Plaintext> m = scheme_.decrypt(sk_, c);
    const OracleStatus outcome =
        m ? OracleStatus::kAnswered : OracleStatus::kDecryptionFailed;
    events_.push_back({OracleKind::kDecrypt, phase(), outcome});
    return {outcome, std::move(m)};
  }

  bool decryption_available() const {
    return kind_ == GameKind::kCca2 ||
           (kind_ == GameKind::kCca1 && !challenge_.has_value());
  }

  Phase phase() const {
    return challenge_ ? Phase::kAfterChallenge : Phase::kBeforeChallenge;
  }

  const std::vector<OracleEvent>& events() const { return events_; }

  void issue_challenge(const Ciphertext& c) { challenge_ = c; }

  std::vector<OracleEvent> take_events() { return std::move(events_); }

 private:
  OracleStatus decrypt_status(const Ciphertext& c) const {
    if (kind_ == GameKind::kCpa) return OracleStatus::kUnavailable;
    if (challenge_ && kind_ == GameKind::kCca1) return OracleStatus::kClosed;
    if (challenge_ && c == *challenge_) return OracleStatus::kRefusedChallenge;
    return OracleStatus::kAnswered;
  }

  const S& scheme_;
  const PublicKey& pk_;
  const SecretKey& sk_;
  GameKind kind_;
  RandomSource rng_;
  std::optional<Ciphertext> challenge_;
  std::vector<OracleEvent> events_;
};

template <typename A, typename S>
concept Adversary =
    SchemeUnderTest<S> &&
    requires(A& adv, const typename S::PublicKey& pk, const typename S::Ciphertext& c,
             Oracles<S>& oracles, RandomSource& coins) {
      { adv.choose_messages(pk, oracles, coins) }
          -> std::same_as<std::pair<typename S::Plaintext, typename S::Plaintext>>;
      { adv.guess(pk, c, oracles, coins) } -> std::convertible_to<bool>;
    };

template <SchemeUnderTest S, Adversary<S> A>
GameOutcome<S> run_game(const S& scheme, A& adversary, RandomSource& rng,
                        GameKind kind) {
  // Fork order is part of the replay contract; do not reorder.
  RandomSource keygen_rng = rng.fork();
  RandomSource oracle_rng = rng.fork();
  RandomSource coins = rng.fork();
  RandomSource challenge_rng = rng.fork();
  const bool hidden_bit = rng.coin();

  const auto [pk, sk] = scheme.keygen(keygen_rng);
  Oracles<S> oracles(scheme, pk, sk, kind, std::move(oracle_rng));

  auto [m0, m1] = adversary.choose_messages(pk, oracles, coins);
  if (m0 == m1) {
    throw Error(ErrorCode::kAdversaryContractViolation, "adversary chose m0 == m1");
  }
  if (!scheme.is_valid_plaintext(pk, m0) || !scheme.is_valid_plaintext(pk, m1)) {
    throw Error(ErrorCode::kAdversaryContractViolation,
                "adversary chose a message outside the plaintext space");
  }

  auto challenge = scheme.encrypt(pk, hidden_bit ? m1 : m0, challenge_rng);
  oracles.issue_challenge(challenge);
  const bool guess = static_cast<bool>(adversary.guess(pk, challenge, oracles, coins));

  return GameOutcome<S>{kind,          hidden_bit,   guess,
                        guess == hidden_bit, std::move(m0), std::move(m1),
                        std::move(challenge), oracles.take_events()};
}

template <SchemeUnderTest S, Adversary<S> A>
GameOutcome<S> run_ind_cpa(const S& scheme, A& adversary, RandomSource& rng) {
  return run_game(scheme, adversary, rng, GameKind::kCpa);
}

template <SchemeUnderTest S, Adversary<S> A>
GameOutcome<S> run_ind_cca1(const S& scheme, A& adversary, RandomSource& rng) {
  return run_game(scheme, adversary, rng, GameKind::kCca1);
}

template <SchemeUnderTest S, Adversary<S> A>
GameOutcome<S> run_ind_cca2(const S& scheme, A& adversary, RandomSource& rng) {
  return run_game(scheme, adversary, rng, GameKind::kCca2);
}

/// Empirical success rate with a Wilson 95% interval. The advantage is the
/// excess of the success rate over 1/2.
struct AdvantageEstimate {
  std::size_t trials = 0;
  std::size_t wins = 0;
  double success_rate = 0.0;
  double interval_low = 0.0;
  double interval_high = 0.0;

  double excess() const { return success_rate - 0.5; }

  static AdvantageEstimate from_counts(std::size_t trials, std::size_t wins);
};

/// One transcript record, independent of the scheme's message types.
struct RunRecord {
  std::size_t index;
  bool hidden_bit;
  bool guess;
  bool win;
  std::size_t encrypt_calls;
  std::size_t decrypt_calls;
};

template <SchemeUnderTest S>
RunRecord make_record(std::size_t index, const GameOutcome<S>& outcome) {
  return {index,
          outcome.hidden_bit,
          outcome.guess,
          outcome.win,
          outcome.encrypt_calls(),
          outcome.decrypt_calls()};
}

/// `run <i> b <0|1> b' <0|1> win <0|1> enc_calls <n> dec_calls <n>`
std::string format_record(const RunRecord& record);

/// `trials <n> wins <n> rate <decimal>`
std::string format_summary(const AdvantageEstimate& estimate);

/// Shortest round-trip decimal, always with a fractional part ("1.0").
std::string format_rate(double rate);

/// Runs `trials` independent experiments, each on its own child stream of
/// rng, and calls on_run (when set) with every outcome in order.
template <SchemeUnderTest S, Adversary<S> A>
AdvantageEstimate estimate_advantage(
    const S& scheme, A& adversary, std::size_t trials, RandomSource& rng,
    GameKind kind = GameKind::kCpa,
    const std::type_identity_t<std::function<void(std::size_t, const GameOutcome<S>&)>>&
        on_run = {}) {
  std::size_t wins = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    RandomSource run_rng = rng.fork();
    const GameOutcome<S> outcome = run_game(scheme, adversary, run_rng, kind);
    wins += outcome.win ? 1 : 0;
    if (on_run) on_run(i, outcome);
  }
  return AdvantageEstimate::from_counts(trials, wins);
}

}  // namespace ntrulab::games
