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

#include "sqfree/word.hpp"

#include <algorithm>
#include <cctype>

#include "sqfree/errors.hpp"

namespace sqfree {

Alphabet::Alphabet(unsigned size) : size_(size) {
  if (size == 0 || size > kMaxSize) {
    throw InvalidArgument("alphabet size must be in 1.." +
                          std::to_string(kMaxSize) + ", got " +
                          std::to_string(size));
  }
}

std::string letter_name(unsigned letter) {
  if (letter < 26) return std::string(1, static_cast<char>('a' + letter));
  return "l" + std::to_string(letter);
}

Word Word::parse(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < text.size();) {
    const char ch = text[i];
    unsigned letter = 0;
    if (ch == 'l' && i + 1 < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      std::size_t j = i + 1;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j]))) {
        letter = letter * 10 + static_cast<unsigned>(text[j] - '0');
        if (letter >= Alphabet::kMaxSize) break;
        ++j;
      }
      i = j;
    } else if (ch >= 'a' && ch <= 'z') {
      letter = static_cast<unsigned>(ch - 'a');
      ++i;
    } else {
      throw InvalidArgument("unexpected character '" + std::string(1, ch) +
                            "' in word \"" + std::string(text) + "\"");
    }
    if (!alphabet.contains(letter)) {
      throw InvalidArgument("letter " + letter_name(letter) +
                            " is outside an alphabet of size " +
                            std::to_string(alphabet.size()));
    }
    letters.push_back(static_cast<Letter>(letter));
  }
  return Word(std::move(letters));
}

Word Word::appended(Letter c) const {
  Word out = *this;
  out.push_back(c);
  return out;
}

Word Word::reversed() const {
  std::vector<Letter> r(letters_.rbegin(), letters_.rend());
  return Word(std::move(r));
}

std::string Word::to_string() const {
  std::string out;
  for (Letter c : letters_) out += letter_name(c);
  return out;
}

namespace {

bool is_square_at(std::span<const Letter> w, std::size_t start,
                  std::size_t half) {
  return std::equal(w.begin() + start, w.begin() + start + half,
                    w.begin() + start + half);
}

// Half-length of the shortest square that is a suffix of w·c, or 0.
std::size_t shortest_suffix_square(std::span<const Letter> w, Letter c) {
  const std::size_t len = w.size() + 1;
  for (std::size_t p = 1; 2 * p <= len; ++p) {
    // w·c ends with a square of period p iff c == w[len-1-p] and the
    // p-1 letters before c repeat at distance p.
    if (w[len - 1 - p] != c) continue;
    bool match = true;
    for (std::size_t t = 1; t < p; ++t) {
      if (w[len - 1 - t] != w[len - 1 - t - p]) {
        match = false;
        break;
      }
    }
    if (match) return p;
  }
  return 0;
}

}  // namespace

std::optional<SquareWitness> find_square(std::span<const Letter> w) {
  const std::size_t n = w.size();
  for (std::size_t start = 0; start + 1 < n; ++start) {
    for (std::size_t half = 1; start + 2 * half <= n; ++half) {
      if (is_square_at(w, start, half)) return SquareWitness{start, half};
    }
  }
  return std::nullopt;
}

bool suffix_extension_is_square_free(std::span<const Letter> w, Letter c) {
  return shortest_suffix_square(w, c) == 0;
}

unsigned extension_count(std::span<const Letter> w, const Alphabet& alphabet) {
  unsigned count = 0;
  for (unsigned c = 0; c < alphabet.size(); ++c) {
    if (suffix_extension_is_square_free(w, static_cast<Letter>(c))) ++count;
  }
  return count;
}

std::vector<std::size_t> stop_word_square_lengths(std::span<const Letter> w,
                                                  const Alphabet& alphabet) {
  std::vector<std::size_t> lengths(alphabet.size());
  for (unsigned c = 0; c < alphabet.size(); ++c) {
    lengths[c] = shortest_suffix_square(w, static_cast<Letter>(c));
    if (lengths[c] == 0) {
      throw InvalidArgument("not a stop-word: appending " + letter_name(c) +
                            " keeps it square-free");
    }
  }
  return lengths;
}

}  // namespace sqfree
