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

#ifndef SQFREE_CACHE_HPP_
#define SQFREE_CACHE_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqfree/counting.hpp"

namespace sqfree {

// Exact count records keyed by (x, n), with the provenance of the run that
// produced them.
//
// File format (one JSON object per line, no whitespace):
//   {"format":"sqfree-count-cache","version":1,"engine":"1.0.0","symmetry":"fix-first-two"}
//   {"x":3,"n":10,"total":"144","ext":["0","84","60"]}
// Counts are decimal strings; "ext" is omitted for unclassified records.
// Records are written sorted by x, then n.
class CountCache {
 public:
  using Key = std::pair<unsigned, unsigned>;

  CountCache();
  CountCache(std::string engine, SymmetryMode symmetry);

  const std::string& engine() const { return engine_; }
  SymmetryMode symmetry() const { return symmetry_; }
  const std::map<Key, CountRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }

  // Validates `record` on its own and against neighbours, then stores it.
  // An existing record for the same key must agree on the total and, when
  // both are classified, on the extension classes; a classified record
  // replaces an unclassified one. Throws IntegrityError otherwise.
  void put(const CountRecord& record);

  const CountRecord* find(unsigned x, unsigned n) const;

  // Records n = 0..n_max for alphabet x, if all present (and classified
  // when `classified` is set).
  std::optional<std::vector<CountRecord>> range(unsigned x, unsigned n_max,
                                                bool classified) const;

  friend bool operator==(const CountCache&, const CountCache&) = default;

 private:
  void check_neighbours(const CountRecord& record) const;

  std::string engine_;
  SymmetryMode symmetry_;
  std::map<Key, CountRecord> records_;
};

// Throws IntegrityError if `record` violates a per-record invariant.
void validate_record(const CountRecord& record);

std::string serialize_record(const CountRecord& record);
CountRecord parse_record(const std::string& line);

// Writes atomically (temporary file, then rename).
void checkpoint_save(const CountCache& cache, const std::filesystem::path& path);

// Throws IntegrityError on a malformed file or inconsistent records.
CountCache checkpoint_load(const std::filesystem::path& path);

// Loads `path` and merges it into `cache`; overlapping records must agree.
void checkpoint_merge(CountCache& cache, const std::filesystem::path& path);

// count_up_to / classify_up_to backed by `cache`. Cached records are
// returned as-is when the whole range is present; otherwise the range is
// computed fresh, every overlapping cached record is checked against the
// fresh one, and the new records are added.
std::vector<CountRecord> cached_census(CountCache& cache, unsigned x,
                                       unsigned n_max, bool classified,
                                       const CountOptions& options = {});

}  // namespace sqfree

#endif  // SQFREE_CACHE_HPP_
