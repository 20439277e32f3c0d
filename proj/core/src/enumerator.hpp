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

#ifndef SQFREE_SRC_ENUMERATOR_HPP_
#define SQFREE_SRC_ENUMERATOR_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "sqfree/word.hpp"

namespace sqfree::detail {

// Raw per-subtree tallies. Slot k is the number of distinct letters in
// canonical mode and always 0 otherwise. `ext` counts nodes by how many of
// the enumerable letters extend them square-free.
struct Tally {
  unsigned n_max = 0;
  unsigned slots = 0;
  unsigned ext_slots = 0;
  std::vector<std::uint64_t> nodes;
  std::vector<std::uint64_t> ext;

  Tally() = default;
  Tally(unsigned n_max, unsigned slots, unsigned ext_slots);

  std::uint64_t& node(unsigned n, unsigned k) { return nodes[n * slots + k]; }
  std::uint64_t node(unsigned n, unsigned k) const {
    return nodes[n * slots + k];
  }
  std::uint64_t& extension(unsigned n, unsigned k, unsigned e) {
    return ext[(n * slots + k) * ext_slots + e];
  }
  std::uint64_t extension(unsigned n, unsigned k, unsigned e) const {
    return ext[(n * slots + k) * ext_slots + e];
  }

  Tally& operator+=(const Tally& other);
};

struct EnumerationSpec {
  // Letters the search may place: all of them in plain mode, the cap on
  // distinct letters in canonical mode.
  unsigned letters = 0;
  bool canonical = false;
  unsigned n_max = 0;
  // When false the last level is counted from its parent without being
  // visited, and ext is not tallied at n_max.
  bool classify = false;
};

struct Subtree {
  std::vector<Letter> prefix;
};

// Depth-first enumeration of square-free words. Nodes are tallied from the
// seed's depth downward.
class Enumerator {
 public:
  explicit Enumerator(const EnumerationSpec& spec);

  // `prefix` must be square-free (and canonical in canonical mode).
  void seed(std::span<const Letter> prefix);

  // Tally the subtree under the seed.
  void run(Tally& tally);

  // Walk down to `depth` and collect the subtree roots there, tallying only
  // nodes strictly above that depth.
  void split(unsigned depth, Tally& tally, std::vector<Subtree>& out);

  Tally make_tally() const;

 private:
  template <bool kSplit>
  void descend(unsigned len, unsigned k, Tally& tally, unsigned split_depth,
               std::vector<Subtree>* out);

  std::uint64_t forbidden(unsigned len) const;
  void push(unsigned len, Letter c);

  EnumerationSpec spec_;
  unsigned seed_len_ = 0;
  unsigned seed_k_ = 0;
  std::vector<std::uint8_t> storage_;
  std::uint8_t* buf_ = nullptr;    // w[i] lives at buf_[kWidth - i]
  std::uint8_t* runs_ = nullptr;   // runs_[len*kWidth + p-1]
};

}  // namespace sqfree::detail

#endif  // SQFREE_SRC_ENUMERATOR_HPP_
