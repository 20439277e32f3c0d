// Copyright 2026 The sqfree Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sqfree/count.hpp"

#include <algorithm>
#include <cmath>

#include "sqfree/errors.hpp"

namespace sqfree {

std::optional<Count> checked_add(Count a, Count b) {
  if (a > kCountMax - b) return std::nullopt;
  return a + b;
}

std::optional<Count> checked_mul(Count a, Count b) {
  if (a != 0 && b > kCountMax / a) return std::nullopt;
  return a * b;
}

std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Count parse_count(std::string_view text) {
  if (text.empty()) throw InvalidArgument("empty count");
  Count value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw InvalidArgument("malformed count \"" + std::string(text) + "\"");
    }
    auto next = checked_mul(value, 10);
    if (next) next = checked_add(*next, static_cast<Count>(ch - '0'));
    if (!next) {
      throw InvalidArgument("count \"" + std::string(text) +
                            "\" exceeds 128 bits");
    }
    value = *next;
  }
  return value;
}

double log_count(Count value) {
  const auto hi = static_cast<unsigned long long>(value >> 64);
  const auto lo = static_cast<unsigned long long>(value);
  if (hi == 0) return std::log(static_cast<long double>(lo));
  const long double v = static_cast<long double>(hi) * 18446744073709551616.0L +
                        static_cast<long double>(lo);
  return static_cast<double>(std::log(v));
}

}  // namespace sqfree
