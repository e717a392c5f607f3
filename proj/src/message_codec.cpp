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

#include "ntrulab/message_codec.hpp"

#include "ntrulab/classical.hpp"
#include "ntrulab/error.hpp"

namespace ntrulab {

namespace {

constexpr std::int64_t kLetterValues = 27;  // 0 marks the end, 1..26 are letters

}  // namespace

std::size_t digits_per_letter(Modulus p) {
  std::size_t t = 0;
  for (std::int64_t span = 1; span < kLetterValues; span *= p.value()) ++t;
  return t;
}

std::size_t letter_capacity(const NtruParams& params) {
  return params.n() / digits_per_letter(params.p());
}

ConvPoly encode_letters(std::string_view text, const NtruParams& params) {
  const classical::Z26Text symbols = classical::encode_text(text);
  const std::size_t capacity = letter_capacity(params);
  if (symbols.size() > capacity) {
    throw Error(ErrorCode::kCodecError,
                std::to_string(symbols.size()) + " letters exceed the capacity of " +
                    std::to_string(capacity) + " for N = " + std::to_string(params.n()));
  }
  const Modulus p = params.p();
  const std::size_t t = digits_per_letter(p);
  ConvPoly m = ConvPoly::zero(params.n());
  std::size_t slot = 0;
  for (const std::uint8_t s : symbols.symbols()) {
    std::int64_t value = s + 1;
    for (std::size_t j = 0; j < t; ++j) {
      m[slot++] = p.center(value % p.value());
      value /= p.value();
    }
  }
  return m;
}

std::string decode_letters(const ConvPoly& m, const NtruParams& params) {
  const Modulus p = params.p();
  const std::size_t t = digits_per_letter(p);
  std::string out;
  for (std::size_t base = 0; base + t <= m.rank(); base += t) {
    std::int64_t value = 0;
    for (std::size_t j = t; j-- > 0;) value = value * p.value() + p.reduce(m[base + j]);
    if (value == 0) break;
    if (value >= kLetterValues) {
      throw Error(ErrorCode::kCodecError,
                  "digit group at x^" + std::to_string(base) + " is not a letter");
    }
    out += static_cast<char>('a' + value - 1);
  }
  return out;
}

}  // namespace ntrulab
