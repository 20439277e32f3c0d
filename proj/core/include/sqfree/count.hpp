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

#ifndef SQFREE_COUNT_HPP_
#define SQFREE_COUNT_HPP_

#include <optional>
#include <string>
#include <string_view>

namespace sqfree {

// Exact word counts. 128 bits covers every (x, n) the engine accepts; all
// arithmetic on Count outside the hot loop goes through the checked helpers.
using Count = unsigned __int128;

inline constexpr Count kCountMax = ~Count{0};

std::optional<Count> checked_add(Count a, Count b);
std::optional<Count> checked_mul(Count a, Count b);

// Decimal rendering and parsing. parse_count throws InvalidArgument on
// anything that is not a plain decimal number fitting in 128 bits.
std::string to_string(Count value);
Count parse_count(std::string_view text);

// Natural logarithm, accurate to double precision for the full range.
double log_count(Count value);

}  // namespace sqfree

#endif  // SQFREE_COUNT_HPP_
