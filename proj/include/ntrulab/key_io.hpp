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

// Line-oriented text files for keys and ciphertexts.
//
//   public key:   ntru-params N p q d
//                 h [h0,...,h_{N-1}]
//   secret key:   ntru-params N p q d
//                 f [...]
//                 Fp [...]
//   ciphertext:   ntru-params N p q d
//                 e [...]
//
// Every line ends in '\n'. Readers accept trailing blank lines and CRLF, and
// report malformed input as ParseError naming the line.

#pragma once

#include <string>
#include <string_view>

#include "ntrulab/ntru.hpp"

namespace ntrulab {

std::string format_params_line(const NtruParams& params);

std::string write_public_key(const NtruPublicKey& pk);
std::string write_secret_key(const NtruSecretKey& sk);
std::string write_ciphertext(const NtruParams& params, const NtruCiphertext& e);

struct CiphertextFile {
  NtruParams params;
  NtruCiphertext ciphertext;
};

// Parameters in files are checked structurally (unchecked profile) so keys
// made for experiments with historical parameter sets still load.
NtruPublicKey read_public_key(std::string_view text);
NtruSecretKey read_secret_key(std::string_view text);
CiphertextFile read_ciphertext(std::string_view text);

}  // namespace ntrulab
