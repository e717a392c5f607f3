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

// Letters <-> NTRU message polynomials, for the command line.
//
// Each letter a..z becomes the value 1..26, written as t base-p digits
// (t = smallest power with p^t >= 27), least significant first, each digit
// center lifted into (-p/2, p/2]. Letters fill the coefficients from x^0 up;
// unused coefficients stay zero, and a digit group of all zeros ends the text.
// For p = 3 that is three ternary coefficients per letter.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "ntrulab/conv_poly.hpp"
#include "ntrulab/ntru.hpp"

namespace ntrulab {

std::size_t digits_per_letter(Modulus p);

/// How many letters fit in one message polynomial.
std::size_t letter_capacity(const NtruParams& params);

/// Throws CodecError for non-letters or text longer than letter_capacity.
ConvPoly encode_letters(std::string_view text, const NtruParams& params);

/// Throws CodecError when a digit group does not decode to a letter.
std::string decode_letters(const ConvPoly& m, const NtruParams& params);

}  // namespace ntrulab
