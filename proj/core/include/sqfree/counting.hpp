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

#ifndef SQFREE_COUNTING_HPP_
#define SQFREE_COUNTING_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqfree/count.hpp"
#include "sqfree/word.hpp"

namespace sqfree {

// Longest word length the enumerator handles.
inline constexpr unsigned kMaxWordLength = 127;

// Most distinct letters a single enumeration may actually place.
inline constexpr unsigned kMaxEnumeratedLetters = 64;

enum class SymmetryMode {
  // Plain depth-first search from the empty word.
  none,
  // Fix the first two letters as 0,1 and multiply by x(x-1).
  fix_first_two,
  // Letters must first occur in increasing order; a word with k distinct
  // letters stands for x(x-1)...(x-k+1) words.
  first_occurrence,
};

std::string_view to_string(SymmetryMode mode);
SymmetryMode parse_symmetry_mode(std::string_view text);

struct CountOptions {
  unsigned workers = 1;
  // Depth at which the search tree is cut into independent subtrees.
  unsigned split_depth = 6;
  SymmetryMode symmetry = SymmetryMode::fix_first_two;
};

// One row of the count tables for alphabet size x and length n.
struct CountRecord {
  unsigned x = 0;
  unsigned n = 0;
  Count total = 0;
  // ext[k] = number of square-free words of length n with exactly k
  // square-free one-letter extensions. Holds x+1 classes for n == 0 and x
  // classes otherwise. Absent when the record was not classified.
  std::optional<std::vector<Count>> ext;

  friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

// Throws OverflowError if x(x-1)^(n-1) does not fit in a Count, and
// InvalidArgument if n exceeds kMaxWordLength.
void check_count_range(unsigned x, unsigned n);

// Exact totals for n = 0..n_max; ext is left empty.
std::vector<CountRecord> count_up_to(unsigned x, unsigned n_max,
                                     const CountOptions& options = {});

// As count_up_to, with extension-class tallies for every n.
std::vector<CountRecord> classify_up_to(unsigned x, unsigned n_max,
                                        const CountOptions& options = {});

// Square-free words of length n over x letters that start with `prefix`.
// Throws InvalidArgument if the prefix is not square-free or uses letters
// outside the alphabet. Zero when n < prefix length.
Count count_with_prefix(unsigned x, std::span<const Letter> prefix, unsigned n,
                        const CountOptions& options = {});

// x^n minus the square-free count. Throws OverflowError if x^n overflows.
Count square_containing_count(unsigned x, unsigned n,
                              const CountOptions& options = {});

// table[n][k] = number of square-free words of length n using exactly k
// distinct letters, for n = 0..n_max and k = 0..x. Enumerated directly with
// first-occurrence canonical forms.
std::vector<std::vector<Count>> exact_letter_counts(
    unsigned x, unsigned n_max, const CountOptions& options = {});

std::string_view engine_version();

}  // namespace sqfree

#endif  // SQFREE_COUNTING_HPP_
