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

#include "ntrulab/games.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace ntrulab::games {

AdvantageEstimate AdvantageEstimate::from_counts(std::size_t trials, std::size_t wins) {
  AdvantageEstimate est;
  est.trials = trials;
  est.wins = wins;
  if (trials == 0) return est;
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double rate = static_cast<double>(wins) / n;
  const double denom = 1.0 + z * z / n;
  const double centre = (rate + z * z / (2.0 * n)) / denom;
  const double half = z * std::sqrt(rate * (1.0 - rate) / n + z * z / (4.0 * n * n)) / denom;
  est.success_rate = rate;
  est.interval_low = std::max(0.0, centre - half);
  est.interval_high = std::min(1.0, centre + half);
  return est;
}

std::string format_rate(double rate) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), rate);
  std::string out(buf, ec == std::errc() ? ptr : buf);
  if (out.find_first_of(".e") == std::string::npos) out += ".0";
  return out;
}

std::string format_record(const RunRecord& r) {
  return "run " + std::to_string(r.index) + " b " + (r.hidden_bit ? "1" : "0") +
         " b' " + (r.guess ? "1" : "0") + " win " + (r.win ? "1" : "0") +
         " enc_calls " + std::to_string(r.encrypt_calls) + " dec_calls " +
         std::to_string(r.decrypt_calls);
}

std::string format_summary(const AdvantageEstimate& e) {
  return "trials " + std::to_string(e.trials) + " wins " + std::to_string(e.wins) +
         " rate " + format_rate(e.success_rate);
}

}  // namespace ntrulab::games
