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

// Shift and substitution ciphers over Z_26.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ntrulab::classical {

inline constexpr int kAlphabetSize = 26;

/// A sequence of symbols, each in [0, 26).
class Z26Text {
 public:
  Z26Text() = default;
  /// Throws CodecError if any symbol is outside [0, 26).
  explicit Z26Text(std::vector<std::uint8_t> symbols);

  const std::vector<std::uint8_t>& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  friend bool operator==(const Z26Text&, const Z26Text&) = default;

 private:
  std::vector<std::uint8_t> symbols_;
};

class ShiftKey {
 public:
  /// Throws InvalidShiftKey outside [0, 26).
  explicit ShiftKey(int k);

  int value() const noexcept { return k_; }

  friend bool operator==(const ShiftKey&, const ShiftKey&) = default;

 private:
  int k_;
};

/// A bijection on Z_26 stored as its image table, with the inverse table
/// precomputed.
class PermutationKey {
 public:
  /// Throws InvalidPermutation unless every value 0..25 appears exactly once.
  explicit PermutationKey(const std::array<int, kAlphabetSize>& image);

  static PermutationKey identity();
  /// x -> x + k mod 26.
  static PermutationKey rotation(const ShiftKey& k);
  /// 26 letters giving the images of a..z, e.g. "qwertyuiopasdfghjklzxcvbnm".
  static PermutationKey from_letters(std::string_view letters);

  std::uint8_t image(std::uint8_t x) const { return image_[x]; }
  std::uint8_t preimage(std::uint8_t y) const { return preimage_[y]; }

  friend bool operator==(const PermutationKey& a, const PermutationKey& b) {
    return a.image_ == b.image_;
  }

 private:
  std::array<std::uint8_t, kAlphabetSize> image_{};
  std::array<std::uint8_t, kAlphabetSize> preimage_{};
};

/// a..z (either case) to 0..25. Throws CodecError on anything else.
Z26Text encode_text(std::string_view letters);
/// 0..25 to lowercase a..z.
std::string decode_text(const Z26Text& text);

Z26Text shift_encrypt(const Z26Text& x, const ShiftKey& k);
Z26Text shift_decrypt(const Z26Text& y, const ShiftKey& k);

Z26Text substitution_encrypt(const Z26Text& x, const PermutationKey& pi);
Z26Text substitution_decrypt(const Z26Text& y, const PermutationKey& pi);

}  // namespace ntrulab::classical
