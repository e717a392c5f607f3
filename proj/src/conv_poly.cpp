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

#include "ntrulab/conv_poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>

#include "ntrulab/error.hpp"
#include "ntrulab/kernels.hpp"

namespace ntrulab {

namespace {

void require_same_rank(const ConvPoly& a, const ConvPoly& b) {
  if (a.rank() != b.rank()) {
    throw Error(ErrorCode::kRankMismatch,
                "ranks " + std::to_string(a.rank()) + " and " +
                    std::to_string(b.rank()));
  }
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(x, y, &r)) {
    throw Error(ErrorCode::kCoefficientOverflow, "sum leaves int64 range");
  }
  return r;
}

// |x| as an unsigned 128-bit value; safe for INT64_MIN.
unsigned __int128 magnitude(std::int64_t x) {
  return x < 0 ? static_cast<unsigned __int128>(-(x + 1)) + 1
               : static_cast<unsigned __int128>(x);
}

unsigned __int128 max_magnitude(std::span<const std::int64_t> values) {
  unsigned __int128 best = 0;
  for (const std::int64_t v : values) best = std::max(best, magnitude(v));
  return best;
}

std::string_view trim_space(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Modulus::Modulus(std::int64_t value) : value_(value) {
  if (value < 2) {
    throw Error(ErrorCode::kInvalidModulus,
                "modulus must be at least 2, got " + std::to_string(value));
  }
}

ConvPoly::ConvPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw Error(ErrorCode::kInvalidRank, "rank must be at least 1");
  }
}

ConvPoly ConvPoly::zero(std::size_t n) {
  return ConvPoly(std::vector<std::int64_t>(n, 0));
}

ConvPoly ConvPoly::constant(std::size_t n, std::int64_t c) {
  ConvPoly p = zero(n);
  p.coeffs_[0] = c;
  return p;
}

bool ConvPoly::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](std::int64_t c) { return c == 0; });
}

ConvPoly add(const ConvPoly& a, const ConvPoly& b) {
  require_same_rank(a, b);
  ConvPoly out = ConvPoly::zero(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

ConvPoly sub(const ConvPoly& a, const ConvPoly& b) {
  require_same_rank(a, b);
  ConvPoly out = ConvPoly::zero(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (__builtin_sub_overflow(a[i], b[i], &out[i])) {
      throw Error(ErrorCode::kCoefficientOverflow, "difference leaves int64 range");
    }
  }
  return out;
}

ConvPoly scale(const ConvPoly& a, std::int64_t k) {
  ConvPoly out = ConvPoly::zero(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (__builtin_mul_overflow(a[i], k, &out[i])) {
      throw Error(ErrorCode::kCoefficientOverflow, "scaled coefficient leaves int64 range");
    }
  }
  return out;
}

ConvPoly mul(const ConvPoly& a, const ConvPoly& b) {
  require_same_rank(a, b);
  // Each output coefficient is a sum of N products, so N * max|a| * max|b|
  // bounds every partial sum the kernels form.
  const unsigned __int128 bound_ab = max_magnitude(a.coeffs()) * max_magnitude(b.coeffs());
  const auto limit = static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max());
  if (bound_ab != 0 && (bound_ab > limit || bound_ab * a.rank() > limit)) {
    throw Error(ErrorCode::kCoefficientOverflow,
                "convolution of rank " + std::to_string(a.rank()) +
                    " may exceed int64; reduce operands first");
  }
  std::vector<std::int64_t> out(a.rank());
  kernels::cyclic_convolve(a.coeffs(), b.coeffs(), out);
  return ConvPoly(std::move(out));
}

ConvPoly reduce_mod(const ConvPoly& a, Modulus m) {
  ConvPoly out = a;
  for (std::size_t i = 0; i < out.rank(); ++i) out[i] = m.reduce(out[i]);
  return out;
}

ConvPoly center_lift(const ConvPoly& a, Modulus m) {
  ConvPoly out = a;
  for (std::size_t i = 0; i < out.rank(); ++i) out[i] = m.center(out[i]);
  return out;
}

std::int64_t evaluate_at_one(const ConvPoly& a) {
  std::int64_t sum = 0;
  for (const std::int64_t c : a.coeffs()) sum = checked_add(sum, c);
  return sum;
}

std::int64_t max_abs_coefficient(const ConvPoly& a) {
  std::int64_t best = 0;
  for (const std::int64_t c : a.coeffs()) best = std::max(best, std::abs(c));
  return best;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t f = 3; f <= n / f; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

std::string to_string(const ConvPoly& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(a[i]);
  }
  out += ']';
  return out;
}

ConvPoly parse_poly(std::string_view text) {
  const std::string_view body = trim_space(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw Error(ErrorCode::kParseError, "polynomial must be written as [c0,c1,...]");
  }
  const std::string_view inner = body.substr(1, body.size() - 2);
  if (trim_space(inner).empty()) {
    throw Error(ErrorCode::kParseError, "polynomial has no coefficients");
  }
  std::vector<std::int64_t> coeffs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = inner.find(',', start);
    const std::string_view field = trim_space(
        inner.substr(start, comma == std::string_view::npos ? inner.npos : comma - start));
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw Error(ErrorCode::kParseError,
                  "bad coefficient '" + std::string(field) + "' at index " +
                      std::to_string(coeffs.size()));
    }
    coeffs.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ConvPoly(std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const ConvPoly& a) {
  return os << to_string(a);
}

}  // namespace ntrulab
