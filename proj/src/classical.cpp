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

#include "ntrulab/classical.hpp"

#include <algorithm>
#include <cctype>

#include "ntrulab/error.hpp"

namespace ntrulab::classical {

Z26Text::Z26Text(std::vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {
  for (const std::uint8_t s : symbols_) {
    if (s >= kAlphabetSize) {
      throw Error(ErrorCode::kCodecError, "symbol " + std::to_string(s) + " is not in Z_26");
    }
  }
}

ShiftKey::ShiftKey(int k) : k_(k) {
  if (k < 0 || k >= kAlphabetSize) {
    throw Error(ErrorCode::kInvalidShiftKey,
                "shift key must lie in [0, 25], got " + std::to_string(k));
  }
}

PermutationKey::PermutationKey(const std::array<int, kAlphabetSize>& image) {
  std::array<bool, kAlphabetSize> seen{};
  for (int x = 0; x < kAlphabetSize; ++x) {
    const int y = image[x];
    if (y < 0 || y >= kAlphabetSize || seen[y]) {
      throw Error(ErrorCode::kInvalidPermutation,
                  "image table is not a permutation of 0..25 (index " +
                      std::to_string(x) + ")");
    }
    seen[y] = true;
    image_[x] = static_cast<std::uint8_t>(y);
    preimage_[y] = static_cast<std::uint8_t>(x);
  }
}

PermutationKey PermutationKey::identity() { return rotation(ShiftKey(0)); }

PermutationKey PermutationKey::rotation(const ShiftKey& k) {
  std::array<int, kAlphabetSize> image{};
  for (int x = 0; x < kAlphabetSize; ++x) image[x] = (x + k.value()) % kAlphabetSize;
  return PermutationKey(image);
}

PermutationKey PermutationKey::from_letters(std::string_view letters) {
  if (letters.size() != kAlphabetSize) {
    throw Error(ErrorCode::kInvalidPermutation,
                "permutation key needs 26 letters, got " + std::to_string(letters.size()));
  }
  std::array<int, kAlphabetSize> image{};
  for (int x = 0; x < kAlphabetSize; ++x) {
    const auto c = static_cast<unsigned char>(letters[x]);
    if (!std::isalpha(c)) {
      throw Error(ErrorCode::kInvalidPermutation, "permutation key must be letters only");
    }
    image[x] = std::tolower(c) - 'a';
  }
  return PermutationKey(image);
}

Z26Text encode_text(std::string_view letters) {
  std::vector<std::uint8_t> symbols;
  symbols.reserve(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const auto c = static_cast<unsigned char>(letters[i]);
    if (c > 0x7f || !std::isalpha(c)) {
      throw Error(ErrorCode::kCodecError,
                  "non-letter at position " + std::to_string(i));
    }
    symbols.push_back(static_cast<std::uint8_t>(std::tolower(c) - 'a'));
  }
  return Z26Text(std::move(symbols));
}

std::string decode_text(const Z26Text& text) {
  std::string out;
  out.reserve(text.size());
  for (const std::uint8_t s : text.symbols()) out += static_cast<char>('a' + s);
  return out;
}

Z26Text shift_encrypt(const Z26Text& x, const ShiftKey& k) {
  std::vector<std::uint8_t> out(x.symbols());
  for (auto& s : out) s = static_cast<std::uint8_t>((s + k.value()) % kAlphabetSize);
  return Z26Text(std::move(out));
}

Z26Text shift_decrypt(const Z26Text& y, const ShiftKey& k) {
  std::vector<std::uint8_t> out(y.symbols());
  for (auto& s : out) {
    s = static_cast<std::uint8_t>((s + kAlphabetSize - k.value()) % kAlphabetSize);
  }
  return Z26Text(std::move(out));
}

Z26Text substitution_encrypt(const Z26Text& x, const PermutationKey& pi) {
  std::vector<std::uint8_t> out(x.symbols());
  std::transform(out.begin(), out.end(), out.begin(),
                 [&pi](std::uint8_t s) { return pi.image(s); });
  return Z26Text(std::move(out));
}

Z26Text substitution_decrypt(const Z26Text& y, const PermutationKey& pi) {
  std::vector<std::uint8_t> out(y.symbols());
  std::transform(out.begin(), out.end(), out.begin(),
                 [&pi](std::uint8_t s) { return pi.preimage(s); });
  return Z26Text(std::move(out));
}

}  // namespace ntrulab::classical
