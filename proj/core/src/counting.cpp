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

#include <atomic>
#include <thread>

#include "enumerator.hpp"
#include "sqfree/errors.hpp"

#ifndef SQFREE_ENGINE_VERSION
#define SQFREE_ENGINE_VERSION "dev"
#endif

namespace sqfree {

namespace {

using detail::EnumerationSpec;
using detail::Enumerator;
using detail::Subtree;
using detail::Tally;

std::string where(unsigned x, unsigned n) {
  return "(x=" + std::to_string(x) + ", n=" + std::to_string(n) + ")";
}

Count mul_or_throw(Count a, Count b, unsigned x, unsigned n) {
  auto r = checked_mul(a, b);
  if (!r) throw OverflowError("count overflows 128 bits at " + where(x, n));
  return *r;
}

Count add_or_throw(Count a, Count b, unsigned x, unsigned n) {
  auto r = checked_add(a, b);
  if (!r) throw OverflowError("count overflows 128 bits at " + where(x, n));
  return *r;
}

// x(x-1)...(x-k+1), nullopt on overflow.
std::optional<Count> falling_factorial(unsigned x, unsigned k) {
  if (k > x) return Count{0};
  Count r = 1;
  for (unsigned i = 0; i < k; ++i) {
    auto next = checked_mul(r, x - i);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

Tally enumerate(const EnumerationSpec& spec, std::span<const Letter> prefix,
                const CountOptions& options) {
  Enumerator root(spec);
  root.seed(prefix);
  Tally tally = root.make_tally();
  const unsigned depth = options.split_depth;
  if (depth <= prefix.size() || depth >= spec.n_max) {
    root.run(tally);
    return tally;
  }

  std::vector<Subtree> subtrees;
  root.split(depth, tally, subtrees);
  std::vector<Tally> partial(subtrees.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Enumerator e(spec);
    for (std::size_t i = next.fetch_add(1); i < subtrees.size();
         i = next.fetch_add(1)) {
      e.seed(subtrees[i].prefix);
      partial[i] = e.make_tally();
      e.run(partial[i]);
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, options.workers), subtrees.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  // Fixed subtree order; the sum is exact, so the result does not depend on
  // which worker finished first.
  for (const Tally& t : partial) tally += t;
  return tally;
}

void validate_options(const CountOptions& options) {
  if (options.workers == 0) throw InvalidArgument("workers must be >= 1");
  if (options.split_depth == 0) throw InvalidArgument("split depth must be >= 1");
}

std::vector<CountRecord> run_census(unsigned x, unsigned n_max, bool classify,
                                    const CountOptions& options) {
  validate_options(options);
  check_count_range(x, n_max);

  std::vector<CountRecord> records(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    records[n].x = x;
    records[n].n = n;
    if (classify) records[n].ext.emplace(n == 0 ? x + 1 : x, Count{0});
  }
  records[0].total = 1;
  if (classify) (*records[0].ext)[x] = 1;
  if (x == 0 || n_max == 0) return records;

  SymmetryMode mode = options.symmetry;
  if (mode == SymmetryMode::fix_first_two && x < 2) mode = SymmetryMode::none;

  EnumerationSpec spec;
  spec.canonical = mode == SymmetryMode::first_occurrence;
  spec.letters = spec.canonical ? std::min(x, n_max) : x;
  spec.n_max = n_max;
  spec.classify = classify;
  if (spec.letters > kMaxEnumeratedLetters) {
    throw InvalidArgument("enumeration would place " +
                          std::to_string(spec.letters) +
                          " distinct letters; the limit is " +
                          std::to_string(kMaxEnumeratedLetters));
  }

  std::vector<Letter> prefix;
  Count weight = 1;
  unsigned first = 0;
  if (mode == SymmetryMode::fix_first_two) {
    records[1].total = x;
    if (classify) (*records[1].ext)[x - 1] = x;
    if (n_max == 1) return records;
    prefix = {0, 1};
    weight = mul_or_throw(x, x - 1, x, 2);
    first = 2;
  }

  const Tally tally = enumerate(spec, prefix, options);
  for (unsigned n = first; n <= n_max; ++n) {
    CountRecord& rec = records[n];
    rec.total = 0;
    if (classify && n == 0) (*rec.ext)[x] = 0;
    for (unsigned k = 0; k < tally.slots; ++k) {
      const std::uint64_t nodes = tally.node(n, k);
      if (nodes == 0) continue;
      Count w = weight;
      if (spec.canonical) {
        auto ff = falling_factorial(x, k);
        if (!ff) throw OverflowError("count overflows 128 bits at " + where(x, n));
        w = *ff;
      }
      rec.total = add_or_throw(rec.total, mul_or_throw(nodes, w, x, n), x, n);
      if (!classify) continue;
      for (unsigned e = 0; e < tally.ext_slots; ++e) {
        const std::uint64_t c = tally.extension(n, k, e);
        if (c == 0) continue;
        const unsigned cls = spec.canonical ? e + (x - k) : e;
        auto& ext = *rec.ext;
        if (cls >= ext.size()) {
          throw ConsistencyError("extension class " + std::to_string(cls) +
                                 " out of range at " + where(x, n));
        }
        ext[cls] = add_or_throw(ext[cls], mul_or_throw(c, w, x, n), x, n);
      }
    }
  }
  return records;
}

void check_prefix(unsigned x, std::span<const Letter> prefix) {
  for (Letter c : prefix) {
    if (c >= x) {
      throw InvalidArgument("prefix letter " + letter_name(c) +
                            " is outside an alphabet of size " +
                            std::to_string(x));
    }
  }
  if (auto sq = find_square(prefix)) {
    throw InvalidArgument("prefix " + Word({prefix.begin(), prefix.end()}).to_string() +
                          " contains a square at position " +
                          std::to_string(sq->start));
  }
}

}  // namespace

std::string_view to_string(SymmetryMode mode) {
  switch (mode) {
    case SymmetryMode::none:
      return "none";
    case SymmetryMode::fix_first_two:
      return "fix-first-two";
    case SymmetryMode::first_occurrence:
      return "first-occurrence";
  }
  return "unknown";
}

SymmetryMode parse_symmetry_mode(std::string_view text) {
  if (text == "none") return SymmetryMode::none;
  if (text == "fix-first-two") return SymmetryMode::fix_first_two;
  if (text == "first-occurrence") return SymmetryMode::first_occurrence;
  throw InvalidArgument("unknown symmetry mode \"" + std::string(text) + "\"");
}

void check_count_range(unsigned x, unsigned n) {
  if (n > kMaxWordLength) {
    throw InvalidArgument("word length " + std::to_string(n) +
                          " exceeds the supported maximum " +
                          std::to_string(kMaxWordLength));
  }
  if (n == 0 || x < 2) return;
  Count bound = x;
  for (unsigned i = 1; i < n; ++i) {
    auto next = checked_mul(bound, x - 1);
    if (!next) {
      throw OverflowError("trivial bound x(x-1)^(n-1) exceeds 128 bits at " +
                          where(x, n));
    }
    bound = *next;
  }
}

std::vector<CountRecord> count_up_to(unsigned x, unsigned n_max,
                                     const CountOptions& options) {
  return run_census(x, n_max, false, options);
}

std::vector<CountRecord> classify_up_to(unsigned x, unsigned n_max,
                                        const CountOptions& options) {
  return run_census(x, n_max, true, options);
}

Count count_with_prefix(unsigned x, std::span<const Letter> prefix, unsigned n,
                        const CountOptions& options) {
  validate_options(options);
  check_prefix(x, prefix);
  check_count_range(x, n);
  if (n < prefix.size()) return 0;
  if (n == prefix.size()) return 1;
  if (x > kMaxEnumeratedLetters) {
    throw InvalidArgument("alphabet too large for prefix enumeration");
  }
  EnumerationSpec spec;
  spec.letters = x;
  spec.n_max = n;
  const Tally tally = enumerate(spec, prefix, options);
  return tally.node(n, 0);
}

Count square_containing_count(unsigned x, unsigned n,
                              const CountOptions& options) {
  Count all = 1;
  for (unsigned i = 0; i < n; ++i) all = mul_or_throw(all, x, x, n);
  return all - count_up_to(x, n, options).back().total;
}

std::vector<std::vector<Count>> exact_letter_counts(
    unsigned x, unsigned n_max, const CountOptions& options) {
  CountOptions canonical = options;
  canonical.symmetry = SymmetryMode::first_occurrence;
  validate_options(canonical);
  check_count_range(x, n_max);

  std::vector<std::vector<Count>> table(n_max + 1, std::vector<Count>(x + 1, 0));
  table[0][0] = 1;
  if (x == 0 || n_max == 0) return table;

  EnumerationSpec spec;
  spec.canonical = true;
  spec.letters = std::min(x, n_max);
  spec.n_max = n_max;
  if (spec.letters > kMaxEnumeratedLetters) {
    throw InvalidArgument("too many distinct letters for exact_letter_counts");
  }
  const Tally tally = enumerate(spec, {}, canonical);
  for (unsigned n = 1; n <= n_max; ++n) {
    Count factorial = 1;
    for (unsigned k = 1; k <= spec.letters; ++k) {
      factorial = mul_or_throw(factorial, k, x, n);
      const std::uint64_t nodes = tally.node(n, k);
      if (nodes != 0) table[n][k] = mul_or_throw(nodes, factorial, x, n);
    }
  }
  return table;
}

std::string_view engine_version() { return SQFREE_ENGINE_VERSION; }

}  // namespace sqfree
