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

// Inversion in (Z/p^k Z)[x]/(x^N - 1).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "ntrulab/conv_poly.hpp"
#include "ntrulab/error.hpp"

namespace ntrulab {

namespace {

// Dense polynomial over F_p, lowest degree first, no trailing zeros. The zero
// polynomial is the empty vector.
using FieldPoly = std::vector<std::int64_t>;

void trim(FieldPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t inverse_mod(std::int64_t x, std::int64_t p) {
  // x is a nonzero residue of the prime p.
  std::int64_t r0 = p, r1 = x, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t quot = r0 / r1;
    std::int64_t tmp = r0 - quot * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - quot * t1;
    t0 = t1;
    t1 = tmp;
  }
  return t0 < 0 ? t0 + p : t0;
}

FieldPoly field_mul(const FieldPoly& a, const FieldPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  FieldPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  trim(out);
  return out;
}

FieldPoly field_sub(const FieldPoly& a, const FieldPoly& b, std::int64_t p) {
  FieldPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] - b[i] + p) % p;
  trim(out);
  return out;
}

// Long division of num by a nonzero den; returns {quotient, remainder}.
std::pair<FieldPoly, FieldPoly> field_divmod(FieldPoly num, const FieldPoly& den,
                                             std::int64_t p) {
  if (num.size() < den.size()) return {{}, std::move(num)};
  const std::int64_t lead_inv = inverse_mod(den.back(), p);
  FieldPoly quot(num.size() - den.size() + 1, 0);
  for (std::size_t shift = quot.size(); shift-- > 0;) {
    const std::int64_t top = num[shift + den.size() - 1];
    if (top == 0) continue;
    const std::int64_t factor = top * lead_inv % p;
    quot[shift] = factor;
    for (std::size_t j = 0; j < den.size(); ++j) {
      std::int64_t& slot = num[shift + j];
      slot = ((slot - factor * den[j]) % p + p) % p;
    }
  }
  trim(quot);
  trim(num);
  return {std::move(quot), std::move(num)};
}

}  // namespace

std::optional<ConvPoly> invert_mod_prime(const ConvPoly& a, Modulus p) {
  const std::int64_t mod = p.value();
  if (mod > std::numeric_limits<std::int32_t>::max() || !is_prime(mod)) {
    throw Error(ErrorCode::kInvalidModulus,
                std::to_string(mod) + " is not a prime below 2^31");
  }
  const std::size_t n = a.rank();

  // Extended Euclid on (x^N - 1, a), tracking only the cofactor of a:
  // t_i * a == r_i (mod x^N - 1).
  FieldPoly r0(n + 1, 0);
  r0[0] = mod - 1;
  r0[n] = 1;
  FieldPoly r1(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : r1) c = p.reduce(c);
  trim(r1);
  FieldPoly t0;
  FieldPoly t1{1};

  while (!r1.empty()) {
    auto [quot, rem] = field_divmod(r0, r1, mod);
    r0 = std::move(r1);
    r1 = std::move(rem);
    FieldPoly t2 = field_sub(t0, field_mul(quot, t1, mod), mod);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }

  // r0 is now gcd(x^N - 1, a) up to a unit.
  if (r0.size() != 1) return std::nullopt;

  const std::int64_t unit_inv = inverse_mod(r0[0], mod);
  ConvPoly inverse = ConvPoly::zero(n);
  for (std::size_t i = 0; i < t0.size(); ++i) {
    inverse[i % n] = (inverse[i % n] + t0[i] * unit_inv) % mod;
  }
  return inverse;
}

std::optional<ConvPoly> invert_mod_prime_power(const ConvPoly& a, Modulus p,
                                               unsigned k) {
  if (k == 0) {
    throw Error(ErrorCode::kInvalidModulus, "prime power exponent must be at least 1");
  }
  std::int64_t target = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (__builtin_mul_overflow(target, p.value(), &target)) {
      throw Error(ErrorCode::kInvalidModulus, "p^k does not fit in int64");
    }
  }

  std::optional<ConvPoly> inverse = invert_mod_prime(a, p);
  if (!inverse) return std::nullopt;

  std::int64_t precision = p.value();
  while (precision < target) {
    precision = precision > target / precision ? target : precision * precision;
    const Modulus m(precision);
    const ConvPoly af = reduce_mod(mul(center_lift(a, m), *inverse), m);
    ConvPoly correction = reduce_mod(scale(af, -1), m);
    correction[0] = m.reduce(correction[0] + 2);
    inverse = reduce_mod(mul(center_lift(*inverse, m), center_lift(correction, m)), m);
  }
  return inverse;
}

}  // namespace ntrulab
