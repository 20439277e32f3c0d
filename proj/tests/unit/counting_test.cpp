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

#include "sqfree/counting.hpp"

#include <thread>

#include <gtest/gtest.h>

#include "sqfree/errors.hpp"

namespace sqfree {
namespace {

std::vector<Count> totals(const std::vector<CountRecord>& records) {
  std::vector<Count> out;
  for (const auto& r : records) out.push_back(r.total);
  return out;
}

CountOptions with(SymmetryMode mode, unsigned workers = 1, unsigned split = 6) {
  CountOptions o;
  o.symmetry = mode;
  o.workers = workers;
  o.split_depth = split;
  return o;
}

constexpr SymmetryMode kModes[] = {SymmetryMode::none, SymmetryMode::fix_first_two,
                                   SymmetryMode::first_occurrence};

TEST(Counting, TernaryTotals) {
  const auto r = count_up_to(3, 45);
  ASSERT_EQ(r.size(), 46u);
  EXPECT_EQ(r[0].total, 1u);
  EXPECT_EQ(r[1].total, 3u);
  EXPECT_EQ(r[10].total, 144u);
  EXPECT_EQ(r[20].total, 2388u);
  EXPECT_EQ(r[45].total, 1812876u);
  for (const auto& rec : r) {
    EXPECT_EQ(rec.x, 3u);
    EXPECT_FALSE(rec.ext.has_value());
  }
}

TEST(Counting, SmallAlphabets) {
  for (SymmetryMode mode : kModes) {
    EXPECT_EQ(totals(count_up_to(2, 8, with(mode))), (std::vector<Count>{1, 2, 2, 2, 0, 0, 0, 0, 0}))
        << to_string(mode);
    EXPECT_EQ(totals(count_up_to(1, 4, with(mode))), (std::vector<Count>{1, 1, 0, 0, 0}));
    EXPECT_EQ(totals(count_up_to(0, 3, with(mode))), (std::vector<Count>{1, 0, 0, 0}));
  }
  EXPECT_EQ(count_up_to(4, 4)[4].total, 96u);
}

TEST(Counting, BinaryWordsAreExactlyTheListedOnes) {
  // a, b, ab, ba, aba, bab: two words at each of the lengths 1..3.
  const auto r = classify_up_to(2, 4);
  EXPECT_EQ(r[1].total + r[2].total + r[3].total, 6u);
  EXPECT_EQ(r[3].ext, (std::vector<Count>{2, 0}));
}

TEST(Classify, TernaryExtensionClasses) {
  const auto r = classify_up_to(3, 11);
  EXPECT_EQ(r[0].ext, (std::vector<Count>{0, 0, 0, 1}));
  EXPECT_EQ(r[1].ext, (std::vector<Count>{0, 0, 3}));
  EXPECT_EQ(r[2].ext, (std::vector<Count>{0, 0, 6}));
  EXPECT_EQ(r[7].ext, (std::vector<Count>{6, 30, 24}));
  EXPECT_EQ(r[11].ext, (std::vector<Count>{6, 132, 66}));
}

TEST(Classify, RecordInvariants) {
  for (unsigned x = 1; x <= 5; ++x) {
    const auto r = classify_up_to(x, x <= 3 ? 30 : 12);
    for (std::size_t n = 0; n < r.size(); ++n) {
      const auto& ext = *r[n].ext;
      ASSERT_EQ(ext.size(), n == 0 ? x + 1 : x);
      Count sum = 0, next = 0;
      for (std::size_t k = 0; k < ext.size(); ++k) {
        sum += ext[k];
        next += k * ext[k];
      }
      EXPECT_EQ(sum, r[n].total);
      if (n + 1 < r.size()) EXPECT_EQ(next, r[n + 1].total) << "x=" << x << " n=" << n;
      if (n >= 1) {
        Count bound = x;
        for (std::size_t i = 1; i < n; ++i) bound *= (x - 1);
        EXPECT_LE(r[n].total, bound);
      }
    }
  }
}

TEST(Counting, SymmetryModesAgree) {
  for (unsigned x = 3; x <= 6; ++x) {
    const unsigned n = x == 3 ? 25 : 11;
    const auto base = classify_up_to(x, n, with(SymmetryMode::none));
    for (SymmetryMode mode : kModes) {
      EXPECT_EQ(classify_up_to(x, n, with(mode)), base) << "x=" << x << " " << to_string(mode);
      EXPECT_EQ(totals(count_up_to(x, n, with(mode))), totals(base));
    }
  }
}

TEST(Counting, DeterministicAcrossWorkersAndSplitDepths) {
  const unsigned max_workers = std::max(1u, std::thread::hardware_concurrency());
  const auto base = classify_up_to(3, 36, with(SymmetryMode::fix_first_two, 1, 1));
  for (unsigned workers : {1u, 4u, max_workers}) {
    for (unsigned split : {1u, 3u, 6u, 12u, 40u}) {
      EXPECT_EQ(classify_up_to(3, 36, with(SymmetryMode::fix_first_two, workers, split)), base)
          << workers << " workers, split " << split;
    }
  }
  EXPECT_THROW(count_up_to(3, 10, with(SymmetryMode::none, 1, 0)), InvalidArgument);
  const auto canon = count_up_to(5, 12, with(SymmetryMode::first_occurrence, 1));
  EXPECT_EQ(count_up_to(5, 12, with(SymmetryMode::first_occurrence, 4, 4)), canon);
}

TEST(Counting, PrefixCounts) {
  const std::vector<Letter> ab{0, 1};
  EXPECT_EQ(count_with_prefix(3, ab, 10), 24u);
  EXPECT_EQ(count_with_prefix(3, std::vector<Letter>{0}, 1), 1u);
  EXPECT_EQ(count_with_prefix(3, ab, 1), 0u);
  EXPECT_EQ(count_with_prefix(3, ab, 2), 1u);
  // Prefixes related by a letter permutation have equally many continuations.
  EXPECT_EQ(count_with_prefix(4, std::vector<Letter>{0, 1, 2}, 9),
            count_with_prefix(4, std::vector<Letter>{2, 0, 3}, 9));
  EXPECT_EQ(count_with_prefix(4, std::vector<Letter>{0, 1, 0, 2}, 10),
            count_with_prefix(4, std::vector<Letter>{3, 1, 3, 0}, 10));
  EXPECT_THROW(count_with_prefix(3, std::vector<Letter>{0, 0}, 5), InvalidArgument);
  EXPECT_THROW(count_with_prefix(3, std::vector<Letter>{0, 3}, 5), InvalidArgument);
}

TEST(Counting, FixingTheFirstTwoLettersFactorizes) {
  const std::vector<Letter> ab{0, 1};
  for (unsigned x = 3; x <= 5; ++x) {
    const auto r = count_up_to(x, 12, with(SymmetryMode::none));
    for (unsigned n = 2; n <= 12; ++n) {
      EXPECT_EQ(r[n].total, Count{x} * (x - 1) * count_with_prefix(x, ab, n)) << x << "," << n;
    }
  }
}

TEST(Counting, SquareContainingCounts) {
  EXPECT_EQ(square_containing_count(3, 2), 3u);
  EXPECT_EQ(square_containing_count(2, 4), 16u);
  EXPECT_EQ(square_containing_count(3, 10), 58905u);
  for (unsigned x = 2; x <= 4; ++x) {
    Count power = x;
    for (unsigned n = 2; n <= 12; ++n) {
      EXPECT_GE(square_containing_count(x, n), power) << x << "," << n;
      power *= x;
    }
  }
  EXPECT_THROW(square_containing_count(256, 20), OverflowError);
}

TEST(Counting, SubadditivityAndUpperBoundChain) {
  const auto r = count_up_to(3, 40);
  for (unsigned m = 1; m <= 40; ++m) {
    for (unsigned n = 1; m + n <= 40; ++n) {
      EXPECT_LE(r[m + n].total, r[m].total * r[n].total);
    }
  }
  // omega_{n+k} * omega_j <= omega_{k+j} * omega_n
  for (unsigned j = 0; j <= 2; ++j) {
    for (unsigned k = 1; k + j <= 40; ++k) {
      for (unsigned n = j; n + k <= 40; ++n) {
        EXPECT_LE(r[n + k].total * r[j].total, r[k + j].total * r[n].total) << j << "," << k << "," << n;
      }
    }
  }
}

TEST(Counting, RangeChecks) {
  EXPECT_NO_THROW(check_count_range(3, 127));
  EXPECT_THROW(check_count_range(3, 128), InvalidArgument);
  EXPECT_THROW(check_count_range(256, 20), OverflowError);
  EXPECT_THROW(count_up_to(200, 30), OverflowError);
  EXPECT_THROW(count_up_to(3, 200), InvalidArgument);
}

TEST(Counting, SymmetryModeNames) {
  for (SymmetryMode mode : kModes) EXPECT_EQ(parse_symmetry_mode(to_string(mode)), mode);
  EXPECT_EQ(to_string(SymmetryMode::fix_first_two), "fix-first-two");
  EXPECT_THROW(parse_symmetry_mode("bogus"), InvalidArgument);
}

TEST(ExactLetterCounts, SumsToTotalsWithBinomialWeights) {
  const unsigned x = 5, n_max = 10;
  const auto table = exact_letter_counts(x, n_max);
  const auto r = count_up_to(x, n_max);
  ASSERT_EQ(table.size(), n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    ASSERT_EQ(table[n].size(), x + 1);
    // Words over exactly k of the x letters: C(x,k) choices of letters.
    Count sum = 0;
    Count choose = 1;
    for (unsigned k = 0; k <= x; ++k) {
      sum += choose * table[n][k];
      choose = choose * (x - k) / (k + 1);
    }
    EXPECT_EQ(sum, r[n].total) << n;
  }
  EXPECT_EQ(table[5][5], 120u);
  EXPECT_EQ(table[4][3], 18u);
  EXPECT_EQ(table[2][2], 2u);
  EXPECT_EQ(table[3][2], 2u);
  EXPECT_EQ(table[4][2], 0u);
}

}  // namespace
}  // namespace sqfree
