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

// Exact arithmetic in the convolution ring Z[x]/(x^N - 1) and its coefficient
// quotients mod p and mod q.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ntrulab {

/// A coefficient modulus (p or q). Always at least 2.
class Modulus {
 public:
  explicit Modulus(std::int64_t value);

  std::int64_t value() const noexcept { return value_; }

  /// Canonical residue in [0, value).
  std::int64_t reduce(std::int64_t x) const noexcept {
    const std::int64_t r = x % value_;
    return r < 0 ? r + value_ : r;
  }

  /// Centered residue in (-value/2, value/2].
  std::int64_t center(std::int64_t x) const noexcept {
    const std::int64_t r = reduce(x);
    return 2 * r > value_ ? r - value_ : r;
  }

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  std::int64_t value_;
};

/// An element of Z[x]/(x^N - 1): exactly N signed coefficients, index i
/// holding the coefficient of x^i. Coefficients are never reduced implicitly.
class ConvPoly {
 public:
  /// Takes ownership of the coefficients; the rank is their count. Throws
  /// InvalidRank for an empty sequence.
  explicit ConvPoly(std::vector<std::int64_t> coeffs);

  static ConvPoly zero(std::size_t n);
  static ConvPoly constant(std::size_t n, std::int64_t c);
  static ConvPoly one(std::size_t n) { return constant(n, 1); }

  std::size_t rank() const noexcept { return coeffs_.size(); }
  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }

  std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }
  std::int64_t& operator[](std::size_t i) { return coeffs_[i]; }

  bool is_zero() const noexcept;

  friend bool operator==(const ConvPoly&, const ConvPoly&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

// Ring operations. All throw RankMismatch on unequal ranks and
// CoefficientOverflow when an exact int64 result cannot be guaranteed.
ConvPoly add(const ConvPoly& a, const ConvPoly& b);
ConvPoly sub(const ConvPoly& a, const ConvPoly& b);
ConvPoly scale(const ConvPoly& a, std::int64_t k);

/// Cyclic convolution: c_k = sum over i + j = k (mod N) of a_i * b_j.
ConvPoly mul(const ConvPoly& a, const ConvPoly& b);

inline ConvPoly operator+(const ConvPoly& a, const ConvPoly& b) { return add(a, b); }
inline ConvPoly operator-(const ConvPoly& a, const ConvPoly& b) { return sub(a, b); }
inline ConvPoly operator*(const ConvPoly& a, const ConvPoly& b) { return mul(a, b); }
inline ConvPoly operator*(std::int64_t k, const ConvPoly& a) { return scale(a, k); }

/// Every coefficient mapped to its canonical residue in [0, m).
ConvPoly reduce_mod(const ConvPoly& a, Modulus m);

/// Every coefficient mapped to its representative in (-m/2, m/2].
ConvPoly center_lift(const ConvPoly& a, Modulus m);

/// a(1), the sum of all coefficients.
std::int64_t evaluate_at_one(const ConvPoly& a);

std::int64_t max_abs_coefficient(const ConvPoly& a);

/// Inverse in (Z/pZ)[x]/(x^N - 1), canonical in [0, p). Returns nullopt when
/// gcd(a, x^N - 1) over F_p is not a nonzero constant. Throws InvalidModulus
/// unless p is a prime below 2^31.
std::optional<ConvPoly> invert_mod_prime(const ConvPoly& a, Modulus p);

/// Inverse modulo p^k, obtained from the mod-p inverse by Newton lifting
/// F <- F * (2 - a * F), squaring the precision each step.
std::optional<ConvPoly> invert_mod_prime_power(const ConvPoly& a, Modulus p,
                                               unsigned k);

bool is_prime(std::int64_t n);

/// Text form `[c0,c1,...,c_{N-1}]`, base-10, no spaces.
std::string to_string(const ConvPoly& a);

/// Parses the text form; whitespace around brackets, commas and numbers is
/// ignored. Throws ParseError.
ConvPoly parse_poly(std::string_view text);

std::ostream& operator<<(std::ostream& os, const ConvPoly& a);

}  // namespace ntrulab
