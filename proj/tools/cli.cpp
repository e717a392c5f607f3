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

#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string_view>

#include "ntrulab/adversaries.hpp"
#include "ntrulab/classical.hpp"
#include "ntrulab/error.hpp"
#include "ntrulab/games.hpp"
#include "ntrulab/kernels.hpp"
#include "ntrulab/key_io.hpp"
#include "ntrulab/message_codec.hpp"
#include "ntrulab/ntru.hpp"
#include "ntrulab/ntru_game.hpp"

namespace ntrulab::cli {

namespace {

struct ParamFlags {
  std::int64_t n = 7;
  std::int64_t p = 3;
  std::int64_t q = 41;
  std::int64_t d = 2;
  bool unchecked = false;
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "Ring rank N (prime)")->capture_default_str();
    cmd->add_option("--p", p, "Small modulus p (prime)")->capture_default_str();
    cmd->add_option("--q", q, "Large modulus q (prime or power of two)")->capture_default_str();
    cmd->add_option("--d", d, "Ternary weight d")->capture_default_str();
    cmd->add_flag("--unchecked", unchecked,
                  "Allow q <= (6d+1)p; decryption may then fail");
  }

  NtruParams params() const {
    return NtruParams::validate(n, p, q, d,
                                unchecked ? DecryptionProfile::kUnchecked
                                          : DecryptionProfile::kGuaranteed);
  }
};

CLI::Option* add_seed(CLI::App* cmd, std::uint64_t& seed) {
  return cmd->add_option("--seed", seed, "Master seed; drawn and printed when absent");
}

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t seed, std::ostream& log) {
  const std::uint64_t value = opt->count() > 0 ? seed : RandomSource::fresh_seed();
  log << "seed " << value << "\n";
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << contents)) {
    throw Error(ErrorCode::kIoError, "cannot write '" + path + "'");
  }
}

void emit(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << contents;
  } else {
    write_file(path, contents);
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// A plaintext file holds either a polynomial `[c0,...]` or a run of letters.
ConvPoly read_message(std::string_view contents, const NtruParams& params) {
  const std::string_view body = trim(contents);
  if (!body.empty() && body.front() == '[') return parse_poly(body);
  return encode_letters(body, params);
}

int cmd_keygen(ParamFlags& flags, const std::string& prefix, std::ostream& out,
               std::ostream& err) {
  const NtruParams params = flags.params();
  RandomSource rng(resolve_seed(flags.seed_opt, flags.seed, err));
  const NtruKeyPair keys = keygen(params, rng);
  write_file(prefix + ".pub", write_public_key(keys.public_key));
  write_file(prefix + ".sec", write_secret_key(keys.secret_key));
  out << "wrote " << prefix << ".pub\n"
      << "wrote " << prefix << ".sec\n";
  return kExitOk;
}

struct EncryptFlags {
  std::string pub;
  std::string in;
  std::string out;
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;
};

int cmd_encrypt(const EncryptFlags& flags, std::ostream& out, std::ostream& err) {
  const NtruPublicKey pk = read_public_key(read_file(flags.pub));
  const NtruPlaintext m(pk.params(), read_message(read_file(flags.in), pk.params()));
  RandomSource rng(resolve_seed(flags.seed_opt, flags.seed, err));
  const NtruCiphertext e = encrypt(pk, m, rng);
  emit(flags.out, write_ciphertext(pk.params(), e), out);
  return kExitOk;
}

struct DecryptFlags {
  std::string sec;
  std::string in;
  std::string out;
  bool text = false;
};

int cmd_decrypt(const DecryptFlags& flags, std::ostream& out) {
  const NtruSecretKey sk = read_secret_key(read_file(flags.sec));
  const CiphertextFile file = read_ciphertext(read_file(flags.in));
  if (!(file.params == sk.params())) {
    throw Error(ErrorCode::kInvalidCiphertext,
                "ciphertext parameters '" + format_params_line(file.params) +
                    "' do not match the secret key");
  }
  const NtruPlaintext m = decrypt(sk, file.ciphertext);
  const std::string body =
      flags.text ? decode_letters(m.m(), sk.params()) : to_string(m.m());
  emit(flags.out, body + "\n", out);
  return kExitOk;
}

struct AttackFlags {
  std::size_t trials = 100;
  bool baseline = false;
  std::string game = "cpa";
};

int cmd_attack_demo(ParamFlags& params_flags, const AttackFlags& flags,
                    std::ostream& out) {
  const NtruParams params = params_flags.params();
  // The seed heads the transcript so a pasted transcript replays on its own.
  const std::uint64_t seed = resolve_seed(params_flags.seed_opt, params_flags.seed, out);
  const games::GameKind kind = flags.game == "cca2"   ? games::GameKind::kCca2
                               : flags.game == "cca1" ? games::GameKind::kCca1
                                                      : games::GameKind::kCpa;

  const games::NtruScheme scheme(params);
  RandomSource rng(seed);
  const auto print_run = [&out](std::size_t i,
                                const games::GameOutcome<games::NtruScheme>& outcome) {
    out << games::format_record(games::make_record(i, outcome)) << "\n";
  };

  games::AdvantageEstimate estimate;
  if (flags.baseline) {
    games::CoinFlipAdversary<games::NtruScheme> adversary(ConvPoly::zero(params.n()),
                                                          ConvPoly::one(params.n()));
    estimate = games::estimate_advantage(scheme, adversary, flags.trials, rng, kind, print_run);
  } else {
    games::NtruCpaAdversary adversary = games::ntru_cpa_adversary();
    estimate = games::estimate_advantage(scheme, adversary, flags.trials, rng, kind, print_run);
  }
  out << games::format_summary(estimate) << "\n";
  return estimate.wins == estimate.trials ? kExitOk : kExitAttackIncomplete;
}

struct CipherFlags {
  std::string key;
  std::string text;
  bool decrypt = false;
};

int cmd_shift(const CipherFlags& flags, std::ostream& out) {
  int k = 0;
  const auto [ptr, ec] =
      std::from_chars(flags.key.data(), flags.key.data() + flags.key.size(), k);
  if (ec != std::errc() || ptr != flags.key.data() + flags.key.size()) {
    throw Error(ErrorCode::kInvalidShiftKey, "shift key must be an integer in [0, 25]");
  }
  const classical::ShiftKey key(k);
  const classical::Z26Text x = classical::encode_text(flags.text);
  const classical::Z26Text y =
      flags.decrypt ? classical::shift_decrypt(x, key) : classical::shift_encrypt(x, key);
  out << classical::decode_text(y) << "\n";
  return kExitOk;
}

int cmd_subst(const CipherFlags& flags, std::ostream& out) {
  const auto pi = classical::PermutationKey::from_letters(flags.key);
  const classical::Z26Text x = classical::encode_text(flags.text);
  const classical::Z26Text y = flags.decrypt ? classical::substitution_decrypt(x, pi)
                                             : classical::substitution_encrypt(x, pi);
  out << classical::decode_text(y) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"NTRU and toy-cipher laboratory"};
  app.name("ntrulab");
  app.require_subcommand(1);

  ParamFlags keygen_params;
  std::string out_prefix;
  auto* keygen_cmd = app.add_subcommand("keygen", "Generate an NTRU key pair");
  keygen_params.attach(keygen_cmd);
  keygen_params.seed_opt = add_seed(keygen_cmd, keygen_params.seed);
  keygen_cmd->add_option("--out-prefix", out_prefix, "Writes PREFIX.pub and PREFIX.sec")
      ->required();

  EncryptFlags enc;
  auto* encrypt_cmd = app.add_subcommand("encrypt", "Encrypt a polynomial or letter file");
  encrypt_cmd->add_option("--pub", enc.pub, "Public key file")->required();
  encrypt_cmd->add_option("--in", enc.in, "Plaintext file: [c0,...] or letters")->required();
  encrypt_cmd->add_option("--out", enc.out, "Ciphertext file (default: stdout)");
  enc.seed_opt = add_seed(encrypt_cmd, enc.seed);

  DecryptFlags dec;
  auto* decrypt_cmd = app.add_subcommand("decrypt", "Decrypt a ciphertext file");
  decrypt_cmd->add_option("--sec", dec.sec, "Secret key file")->required();
  decrypt_cmd->add_option("--in", dec.in, "Ciphertext file")->required();
  decrypt_cmd->add_option("--out", dec.out, "Plaintext file (default: stdout)");
  decrypt_cmd->add_flag("--text", dec.text, "Decode the plaintext back to letters");

  ParamFlags attack_params;
  AttackFlags attack;
  auto* attack_cmd =
      app.add_subcommand("attack-demo", "Run the x = 1 distinguisher against NTRU");
  attack_params.attach(attack_cmd);
  attack_params.seed_opt = add_seed(attack_cmd, attack_params.seed);
  attack_cmd->add_option("--trials", attack.trials, "Number of experiments")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  attack_cmd->add_flag("--baseline", attack.baseline,
                       "Use a coin-flip adversary instead of the distinguisher");
  attack_cmd->add_option("--game", attack.game, "Experiment: cpa, cca1 or cca2")
      ->capture_default_str()
      ->check(CLI::IsMember({"cpa", "cca1", "cca2"}));

  CipherFlags shift;
  auto* shift_cmd = app.add_subcommand("shift", "Shift cipher over Z_26");
  shift_cmd->add_option("--key", shift.key, "Shift in [0, 25]")->required();
  shift_cmd->add_option("--text", shift.text, "Letters a-z")->required();
  shift_cmd->add_flag("--decrypt", shift.decrypt, "Decrypt instead of encrypt");

  CipherFlags subst;
  auto* subst_cmd = app.add_subcommand("subst", "Substitution cipher over Z_26");
  subst_cmd->add_option("--key", subst.key, "26 letters: images of a..z")->required();
  subst_cmd->add_option("--text", subst.text, "Letters a-z")->required();
  subst_cmd->add_flag("--decrypt", subst.decrypt, "Decrypt instead of encrypt");

  auto* info_cmd = app.add_subcommand("info", "Show the active convolution kernel");

  std::vector<const char*> argv{"ntrulab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*keygen_cmd) return cmd_keygen(keygen_params, out_prefix, out, err);
    if (*encrypt_cmd) return cmd_encrypt(enc, out, err);
    if (*decrypt_cmd) return cmd_decrypt(dec, out);
    if (*attack_cmd) return cmd_attack_demo(attack_params, attack, out);
    if (*shift_cmd) return cmd_shift(shift, out);
    if (*subst_cmd) return cmd_subst(subst, out);
    if (*info_cmd) {
      out << "kernel " << kernels::isa_name(kernels::active_isa()) << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace ntrulab::cli
