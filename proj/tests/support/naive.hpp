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

#ifndef SQFREE_TESTS_NAIVE_HPP_
#define SQFREE_TESTS_NAIVE_HPP_

// Generate-and-test reference implementation. Deliberately shares nothing
// with the library: every word of length n is built explicitly and checked
// against every substring.

#include <cstdint>
#include <vector>

namespace sqfree::testing {

inline bool naive_square_free(const std::vector<int>& w) {
  const std::size_t len = w.size();
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t p = 1; i + 2 * p <= len; ++p) {
      bool square = true;
      for (std::size_t k = 0; k < p; ++k) {
        if (w[i + k] != w[i + p + k]) {
          square = false;
          break;
        }
      }
      if (square) return false;
    }
  }
  return true;
}

struct NaiveRow {
  std::uint64_t total = 0;
  // ext[k] for k = 0..x
  std::vector<std::uint64_t> ext;
};

// All x^n words of length n; totals and extension classes.
inline NaiveRow naive_row(unsigned x, unsigned n) {
  NaiveRow row;
  row.ext.assign(x + 1, 0);
  std::vector<int> w(n, 0);
  while (true) {
    if (naive_square_free(w)) {
      ++row.total;
      unsigned e = 0;
      std::vector<int> longer = w;
      longer.push_back(0);
      for (unsigned c = 0; c < x; ++c) {
        longer.back() = static_cast<int>(c);
        if (naive_square_free(longer)) ++e;
      }
      ++row.ext[e];
    }
    // Odometer increment.
    std::size_t i = 0;
    while (i < n && w[i] == static_cast<int>(x) - 1) w[i++] = 0;
    if (i == n) break;
    ++w[i];
  }
  return row;
}

// Totals only, without extension probing.
inline std::uint64_t naive_total(unsigned x, unsigned n) {
  std::uint64_t total = 0;
  std::vector<int> w(n, 0);
  while (true) {
    if (naive_square_free(w)) ++total;
    std::size_t i = 0;
    while (i < n && w[i] == static_cast<int>(x) - 1) w[i++] = 0;
    if (i == n) break;
    ++w[i];
  }
  return total;
}

}  // namespace sqfree::testing

#endif  // SQFREE_TESTS_NAIVE_HPP_
