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

#ifndef SQFREE_WORD_HPP_
#define SQFREE_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sqfree {

// Letters are dense integers 0..size-1. Display uses a..z, then l26, l27, ...
using Letter = std::uint8_t;

class Alphabet {
 public:
  static constexpr unsigned kMaxSize = 256;

  // Throws InvalidArgument unless 1 <= size <= kMaxSize.
  explicit Alphabet(unsigned size);

  unsigned size() const { return size_; }
  bool contains(unsigned letter) const { return letter < size_; }

 private:
  unsigned size_;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  // Parses the display notation ("abacaba", "abl30"). Throws
  // InvalidArgument on unknown characters or letters outside `alphabet`.
  static Word parse(std::string_view text, const Alphabet& alphabet);

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  std::span<const Letter> letters() const { return letters_; }
  operator std::span<const Letter>() const { return letters_; }

  void push_back(Letter c) { letters_.push_back(c); }
  Word appended(Letter c) const;
  Word reversed() const;

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

std::string letter_name(unsigned letter);

// letters[start, start+half_length) == letters[start+half_length, start+2*half_length)
struct SquareWitness {
  std::size_t start = 0;
  std::size_t half_length = 0;

  friend bool operator==(const SquareWitness&, const SquareWitness&) = default;
};

// Leftmost square in `w`; among squares with the same start, the shortest.
// nullopt iff `w` is square-free.
std::optional<SquareWitness> find_square(std::span<const Letter> w);

inline bool is_square_free(std::span<const Letter> w) {
  return !find_square(w).has_value();
}

// Assumes `w` is square-free and tests only the squares that end at the
// appended letter. Garbage in, garbage out, but never undefined behaviour.
bool suffix_extension_is_square_free(std::span<const Letter> w, Letter c);

// Number of letters c of `alphabet` for which w·c is square-free.
unsigned extension_count(std::span<const Letter> w, const Alphabet& alphabet);

// For a stop-word (extension_count == 0): entry c is the half-length of the
// shortest square ending at the appended letter c. Throws InvalidArgument
// when some extension of `w` is square-free.
std::vector<std::size_t> stop_word_square_lengths(std::span<const Letter> w,
                                                  const Alphabet& alphabet);

}  // namespace sqfree

#endif  // SQFREE_WORD_HPP_
