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

#include "enumerator.hpp"

#include <bit>
#include <cstring>

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace sqfree::detail {

namespace {

// Period lanes per word position; also bounds the word length.
constexpr unsigned kWidth = 128;
constexpr unsigned kLane = 32;
constexpr std::uint8_t kSentinel = 0xFF;

// thresholds[p-1] = p-1: w·c squares at period p iff the last p-1 letters
// repeat at distance p and c == w[len-p].
struct Thresholds {
  alignas(64) std::uint8_t value[kWidth];
  constexpr Thresholds() : value{} {
    for (unsigned p = 1; p <= kWidth; ++p) value[p - 1] = static_cast<std::uint8_t>(p - 1);
  }
};
constexpr Thresholds kThresholds{};

inline unsigned chunks_for(unsigned lanes) { return (lanes + kLane - 1) / kLane; }

inline std::uint64_t letter_mask(unsigned k) {
  return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

}  // namespace

Tally::Tally(unsigned n_max_, unsigned slots_, unsigned ext_slots_)
    : n_max(n_max_),
      slots(slots_),
      ext_slots(ext_slots_),
      nodes(static_cast<std::size_t>(n_max_ + 1) * slots_, 0),
      ext(static_cast<std::size_t>(n_max_ + 1) * slots_ * ext_slots_, 0) {}

Tally& Tally::operator+=(const Tally& other) {
  for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] += other.nodes[i];
  for (std::size_t i = 0; i < ext.size(); ++i) ext[i] += other.ext[i];
  return *this;
}

Enumerator::Enumerator(const EnumerationSpec& spec) : spec_(spec) {
  // buf: 2*kWidth + one lane of slack for unaligned lane loads.
  // runs: one row of kWidth counters per length 0..kWidth.
  const std::size_t buf_bytes = 2 * kWidth + kLane + 64;
  const std::size_t runs_bytes = static_cast<std::size_t>(kWidth + 1) * kWidth;
  storage_.assign(buf_bytes + runs_bytes + 128, 0);
  auto base = reinterpret_cast<std::uintptr_t>(storage_.data());
  base = (base + 63) & ~std::uintptr_t{63};
  buf_ = reinterpret_cast<std::uint8_t*>(base);
  std::memset(buf_, kSentinel, buf_bytes);
  runs_ = buf_ + ((buf_bytes + 63) & ~std::size_t{63});
}

Tally Enumerator::make_tally() const {
  const unsigned slots = spec_.canonical ? spec_.letters + 1 : 1;
  return Tally(spec_.n_max, slots, spec_.letters + 1);
}

// Letters c for which w·c contains a square (w = first `len` letters).
std::uint64_t Enumerator::forbidden(unsigned len) const {
  const std::uint8_t* r = runs_ + static_cast<std::size_t>(len) * kWidth;
  const std::uint8_t* tail = buf_ + kWidth - len;  // tail[p] = w[len-p]
  std::uint64_t mask = 0;
  const unsigned chunks = chunks_for(len);
  for (unsigned ch = 0; ch < chunks; ++ch) {
    std::uint32_t bits = 0;
#if defined(__AVX2__)
    const __m256i rv = _mm256_load_si256(reinterpret_cast<const __m256i*>(r + kLane * ch));
    const __m256i tv = _mm256_load_si256(
        reinterpret_cast<const __m256i*>(kThresholds.value + kLane * ch));
    bits = static_cast<std::uint32_t>(
        _mm256_movemask_epi8(_mm256_cmpeq_epi8(_mm256_max_epu8(rv, tv), rv)));
#else
    for (unsigned j = 0; j < kLane; ++j) {
      bits |= static_cast<std::uint32_t>(r[kLane * ch + j] >= kThresholds.value[kLane * ch + j]) << j;
    }
#endif
    while (bits != 0) {
      const unsigned p = kLane * ch + static_cast<unsigned>(std::countr_zero(bits)) + 1;
      bits &= bits - 1;
      mask |= std::uint64_t{1} << tail[p];
    }
  }
  return mask;
}

// Appends c at position len and derives the run counters for len+1:
// runs[len+1][p] = c == w[len-p] ? runs[len][p] + 1 : 0.
void Enumerator::push(unsigned len, Letter c) {
  buf_[kWidth - len] = c;
  const std::uint8_t* r = runs_ + static_cast<std::size_t>(len) * kWidth;
  std::uint8_t* out = runs_ + static_cast<std::size_t>(len + 1) * kWidth;
  const std::uint8_t* tail = buf_ + kWidth - len + 1;  // tail[p-1] = w[len-p]
  const unsigned chunks = chunks_for(len + 1);
#if defined(__AVX2__)
  const __m256i cv = _mm256_set1_epi8(static_cast<char>(c));
  const __m256i ones = _mm256_set1_epi8(-1);
  for (unsigned ch = 0; ch < chunks; ++ch) {
    const __m256i eq = _mm256_cmpeq_epi8(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(tail + kLane * ch)), cv);
    const __m256i rv = _mm256_load_si256(reinterpret_cast<const __m256i*>(r + kLane * ch));
    _mm256_store_si256(reinterpret_cast<__m256i*>(out + kLane * ch),
                       _mm256_and_si256(_mm256_sub_epi8(rv, ones), eq));
  }
#else
  for (unsigned i = 0; i < chunks * kLane; ++i) {
    out[i] = tail[i] == c ? static_cast<std::uint8_t>(r[i] + 1) : 0;
  }
#endif
}

void Enumerator::seed(std::span<const Letter> prefix) {
  seed_len_ = 0;
  seed_k_ = 0;
  for (Letter c : prefix) {
    push(seed_len_++, c);
    if (spec_.canonical && c + 1u > seed_k_) seed_k_ = c + 1u;
  }
}

void Enumerator::run(Tally& tally) {
  descend<false>(seed_len_, seed_k_, tally, 0, nullptr);
}

void Enumerator::split(unsigned depth, Tally& tally, std::vector<Subtree>& out) {
  descend<true>(seed_len_, seed_k_, tally, depth, &out);
}

template <bool kSplit>
void Enumerator::descend(unsigned len, unsigned k, Tally& tally,
                         unsigned split_depth, std::vector<Subtree>* out) {
  if constexpr (kSplit) {
    if (len == split_depth) {
      Subtree s;
      s.prefix.reserve(len);
      for (unsigned i = 0; i < len; ++i) s.prefix.push_back(buf_[kWidth - i]);
      out->push_back(std::move(s));
      return;
    }
  }
  const unsigned slot = spec_.canonical ? k : 0;
  ++tally.node(len, slot);
  if (len == spec_.n_max && !spec_.classify) return;

  const unsigned existing = spec_.canonical ? k : spec_.letters;
  const std::uint64_t allowed = letter_mask(existing) & ~forbidden(len);
  const unsigned allowed_count = static_cast<unsigned>(std::popcount(allowed));
  ++tally.extension(len, slot, allowed_count);
  if (len == spec_.n_max) return;

  const bool fresh = spec_.canonical && k < spec_.letters;
  if (!spec_.classify && len + 1 == spec_.n_max) {
    tally.node(len + 1, slot) += allowed_count;
    if (fresh) ++tally.node(len + 1, k + 1);
    return;
  }
  for (std::uint64_t rest = allowed; rest != 0; rest &= rest - 1) {
    const auto c = static_cast<Letter>(std::countr_zero(rest));
    push(len, c);
    descend<kSplit>(len + 1, k, tally, split_depth, out);
  }
  if (fresh) {
    push(len, static_cast<Letter>(k));
    descend<kSplit>(len + 1, k + 1, tally, split_depth, out);
  }
}

}  // namespace sqfree::detail
