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

#include <benchmark/benchmark.h>

#include <vector>

#include "sqfree/combinatorics.hpp"
#include "sqfree/counting.hpp"
#include "sqfree/word.hpp"

namespace {

using namespace sqfree;

// Longest ternary square-free word reachable greedily; used as a fixture.
std::vector<Letter> long_word(unsigned n) {
  std::vector<Letter> w;
  while (w.size() < n) {
    Letter c = 0;
    while (c < 3 && !suffix_extension_is_square_free(w, c)) ++c;
    if (c == 3) {
      // Dead end: back off and take the next letter.
      Letter last;
      do {
        last = w.back();
        w.pop_back();
        c = last + 1;
        while (c < 3 && !suffix_extension_is_square_free(w, c)) ++c;
      } while (c == 3);
    }
    w.push_back(c);
  }
  return w;
}

void BM_FindSquare(benchmark::State& state) {
  const auto w = long_word(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_square(w));
}
BENCHMARK(BM_FindSquare)->Arg(30)->Arg(90);

void BM_SuffixExtension(benchmark::State& state) {
  const auto w = long_word(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    for (Letter c = 0; c < 3; ++c) benchmark::DoNotOptimize(suffix_extension_is_square_free(w, c));
  }
}
BENCHMARK(BM_SuffixExtension)->Arg(30)->Arg(90);

void BM_CountTernary(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  Count total = 0;
  for (auto _ : state) total = count_up_to(3, n).back().total;
  state.counters["omega"] = static_cast<double>(total);
}
BENCHMARK(BM_CountTernary)->Arg(30)->Arg(40)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_ClassifyTernary(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify_up_to(3, n));
}
BENCHMARK(BM_ClassifyTernary)->Arg(30)->Arg(40)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_SymmetryModes(benchmark::State& state) {
  CountOptions o;
  o.symmetry = static_cast<SymmetryMode>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_up_to(5, 11, o));
  state.SetLabel(std::string(to_string(o.symmetry)));
}
BENCHMARK(BM_SymmetryModes)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Workers(benchmark::State& state) {
  CountOptions o;
  o.workers = static_cast<unsigned>(state.range(0));
  o.split_depth = 10;
  for (auto _ : state) benchmark::DoNotOptimize(count_up_to(3, 45, o));
}
BENCHMARK(BM_Workers)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_RecoverPolynomials(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  CountOptions o;
  o.symmetry = SymmetryMode::first_occurrence;
  for (auto _ : state) {
    const auto grid = omega_grid(n, n, o);
    benchmark::DoNotOptimize(recover_polynomial(n, std::span<const BigInt>(grid[n]).first(n + 1)));
  }
}
BENCHMARK(BM_RecoverPolynomials)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
