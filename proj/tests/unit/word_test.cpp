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
#include <numeric>

#include <gtest/gtest.h>

#include "../support/naive.hpp"
#include "sqfree/errors.hpp"

namespace sqfree {
namespace {

Word w(std::string_view s, unsigned x = 3) { return Word::parse(s, Alphabet(x)); }

std::vector<int> as_ints(const Word& word) { return {word.letters().begin(), word.letters().end()}; }

// Every word of length n over x letters.
std::vector<Word> all_words(unsigned x, unsigned n) {
  std::vector<Word> out;
  std::vector<Letter> cur(n, 0);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = 0;
    while (i < n && cur[i] == x - 1) cur[i++] = 0;
    if (i == n) break;
    ++cur[i];
  }
  return out;
}

TEST(Alphabet, RejectsOutOfRangeSizes) {
  EXPECT_THROW(Alphabet(0), InvalidArgument);
  EXPECT_THROW(Alphabet(257), InvalidArgument);
  EXPECT_EQ(Alphabet(256).size(), 256u);
  EXPECT_TRUE(Alphabet(3).contains(2));
  EXPECT_FALSE(Alphabet(3).contains(3));
}

TEST(Word, ParsesAndPrintsLetterNames) {
  EXPECT_EQ(letter_name(0), "a");
  EXPECT_EQ(letter_name(25), "z");
  EXPECT_EQ(letter_name(26), "l26");
  const Word big = Word::parse("al30b", Alphabet(40));
  ASSERT_EQ(big.length(), 3u);
  EXPECT_EQ(big[1], 30);
  EXPECT_EQ(big.to_string(), "al30b");
  EXPECT_THROW(Word::parse("abd", Alphabet(3)), InvalidArgument);
  EXPECT_THROW(Word::parse("a?", Alphabet(3)), InvalidArgument);
  EXPECT_EQ(w("abc").reversed(), w("cba"));
  EXPECT_EQ(w("ab").appended(2), w("abc"));
}

TEST(FindSquare, ExamplesAndTieBreaking) {
  EXPECT_TRUE(is_square_free(w("")));
  EXPECT_TRUE(is_square_free(w("aba", 2)));
  EXPECT_EQ(find_square(w("aa")), (SquareWitness{0, 1}));
  EXPECT_EQ(find_square(w("abcabc")), (SquareWitness{0, 3}));
  // Leftmost start wins over a shorter square further right.
  EXPECT_EQ(find_square(w("abcabcc")), (SquareWitness{0, 3}));
  // Same start: the shortest half-length.
  EXPECT_EQ(find_square(w("aaaa")), (SquareWitness{0, 1}));
  EXPECT_EQ(find_square(w("cabab")), (SquareWitness{1, 2}));
}

TEST(FindSquare, AgreesWithNaiveOracleExhaustively) {
  for (unsigned x = 1; x <= 3; ++x) {
    for (unsigned n = 0; n <= 12; ++n) {
      for (const Word& word : all_words(x, n)) {
        ASSERT_EQ(is_square_free(word), testing::naive_square_free(as_ints(word))) << word.to_string();
        if (auto sq = find_square(word)) {
          ASSERT_LE(sq->start + 2 * sq->half_length, word.length());
          for (std::size_t k = 0; k < sq->half_length; ++k) {
            ASSERT_EQ(word[sq->start + k], word[sq->start + sq->half_length + k]);
          }
        }
      }
    }
  }
}

TEST(SuffixExtension, Examples) {
  EXPECT_TRUE(suffix_extension_is_square_free(w("ab"), 0));
  EXPECT_FALSE(suffix_extension_is_square_free(w("aba"), 1));
  EXPECT_TRUE(suffix_extension_is_square_free(w("abacab"), 0));
  // Not square-free input: no crash, some answer.
  (void)suffix_extension_is_square_free(w("aab"), 2);
  (void)suffix_extension_is_square_free(w(""), 0);
}

TEST(SuffixExtension, MatchesFullCheckOnSquareFreeWords) {
  for (unsigned x = 1; x <= 3; ++x) {
    for (unsigned n = 0; n <= 12; ++n) {
      for (const Word& word : all_words(x, n)) {
        if (!is_square_free(word)) continue;
        for (Letter c = 0; c < x; ++c) {
          ASSERT_EQ(suffix_extension_is_square_free(word, c), is_square_free(word.appended(c)))
              << word.to_string() << "+" << letter_name(c);
        }
      }
    }
  }
}

TEST(ExtensionCount, Examples) {
  EXPECT_EQ(extension_count(w("abacaba"), Alphabet(3)), 0u);
  EXPECT_EQ(extension_count(w("ab"), Alphabet(3)), 2u);
  EXPECT_EQ(extension_count(w("a"), Alphabet(3)), 2u);
  EXPECT_EQ(extension_count(w(""), Alphabet(3)), 3u);
}

TEST(StopWords, SquareLengths) {
  EXPECT_EQ(stop_word_square_lengths(w("abacaba"), Alphabet(3)), (std::vector<std::size_t>{1, 2, 4}));
  EXPECT_EQ(stop_word_square_lengths(w("acabaca"), Alphabet(3)), (std::vector<std::size_t>{1, 4, 2}));
  EXPECT_THROW(stop_word_square_lengths(w("abc"), Alphabet(3)), InvalidArgument);
}

TEST(StopWords, ShortestAreLengthSevenWithLengthsOneTwoFour) {
  std::size_t found = 0;
  for (unsigned n = 1; n <= 7; ++n) {
    for (const Word& word : all_words(3, n)) {
      if (!is_square_free(word) || extension_count(word, Alphabet(3)) != 0) continue;
      ASSERT_EQ(n, 7u) << word.to_string();
      auto lengths = stop_word_square_lengths(word, Alphabet(3));
      std::sort(lengths.begin(), lengths.end());
      EXPECT_EQ(lengths, (std::vector<std::size_t>{1, 2, 4})) << word.to_string();
      ++found;
    }
  }
  // abacaba and its images under the 6 letter permutations.
  EXPECT_EQ(found, 6u);
}

TEST(Symmetry, ReversalPreservesSquareFreeness) {
  for (const Word& word : all_words(4, 8)) {
    ASSERT_EQ(is_square_free(word.reversed()), is_square_free(word)) << word.to_string();
  }
}

TEST(Symmetry, LetterPermutationPreservesSquareFreenessAndExtensions) {
  std::vector<Letter> perm(4);
  for (const Word& word : all_words(4, 6)) {
    const bool sf = is_square_free(word);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<Letter> mapped;
      for (Letter c : word.letters()) mapped.push_back(perm[c]);
      const Word image(mapped);
      ASSERT_EQ(is_square_free(image), sf);
      if (sf) ASSERT_EQ(extension_count(image, Alphabet(4)), extension_count(word, Alphabet(4)));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

}  // namespace
}  // namespace sqfree
