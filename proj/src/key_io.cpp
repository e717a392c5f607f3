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

#include "ntrulab/key_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "ntrulab/error.hpp"

namespace ntrulab {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string_view::npos) {
    lines.pop_back();
  }
  return lines;
}

void expect_line_count(const std::vector<std::string_view>& lines, std::size_t want) {
  if (lines.size() < want) fail(lines.size() + 1, "unexpected end of file");
  if (lines.size() > want) fail(want + 1, "unexpected trailing content");
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

NtruParams parse_params(std::string_view line) {
  const auto fields = tokens(line);
  if (fields.size() != 5 || fields[0] != "ntru-params") {
    fail(1, "expected 'ntru-params N p q d'");
  }
  std::int64_t values[4] = {};
  for (int i = 0; i < 4; ++i) {
    const std::string_view f = fields[i + 1];
    const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), values[i]);
    if (ec != std::errc() || ptr != f.data() + f.size()) {
      fail(1, "bad integer '" + std::string(f) + "'");
    }
  }
  try {
    return NtruParams::validate(values[0], values[1], values[2], values[3],
                                DecryptionProfile::kUnchecked);
  } catch (const Error& e) {
    fail(1, e.what());
  }
}

ConvPoly parse_tagged_poly(std::string_view line, std::string_view tag, std::size_t line_no) {
  const std::size_t split = line.find_first_of(" \t");
  if (split == std::string_view::npos || line.substr(0, split) != tag) {
    fail(line_no, "expected '" + std::string(tag) + " [c0,...]'");
  }
  try {
    return parse_poly(line.substr(split + 1));
  } catch (const Error& e) {
    fail(line_no, e.what());
  }
}

}  // namespace

std::string format_params_line(const NtruParams& params) {
  std::ostringstream os;
  os << "ntru-params " << params.n() << ' ' << params.p().value() << ' '
     << params.q().value() << ' ' << params.d();
  return os.str();
}

std::string write_public_key(const NtruPublicKey& pk) {
  return format_params_line(pk.params()) + "\nh " + to_string(pk.h()) + "\n";
}

std::string write_secret_key(const NtruSecretKey& sk) {
  return format_params_line(sk.params()) + "\nf " + to_string(sk.f()) + "\nFp " +
         to_string(sk.f_p()) + "\n";
}

std::string write_ciphertext(const NtruParams& params, const NtruCiphertext& e) {
  return format_params_line(params) + "\ne " + to_string(e.e()) + "\n";
}

NtruPublicKey read_public_key(std::string_view text) {
  const auto lines = split_lines(text);
  expect_line_count(lines, 2);
  const NtruParams params = parse_params(lines[0]);
  ConvPoly h = parse_tagged_poly(lines[1], "h", 2);
  try {
    return NtruPublicKey(params, std::move(h));
  } catch (const Error& e) {
    fail(2, e.what());
  }
}

NtruSecretKey read_secret_key(std::string_view text) {
  const auto lines = split_lines(text);
  expect_line_count(lines, 3);
  const NtruParams params = parse_params(lines[0]);
  ConvPoly f = parse_tagged_poly(lines[1], "f", 2);
  ConvPoly f_p = parse_tagged_poly(lines[2], "Fp", 3);
  try {
    return NtruSecretKey(params, std::move(f), std::move(f_p));
  } catch (const Error& e) {
    fail(2, e.what());
  }
}

CiphertextFile read_ciphertext(std::string_view text) {
  const auto lines = split_lines(text);
  expect_line_count(lines, 2);
  const NtruParams params = parse_params(lines[0]);
  ConvPoly e = parse_tagged_poly(lines[1], "e", 2);
  try {
    return CiphertextFile{params, NtruCiphertext(params, std::move(e))};
  } catch (const Error& err) {
    fail(2, err.what());
  }
}

}  // namespace ntrulab
