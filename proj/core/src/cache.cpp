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

#include "sqfree/cache.hpp"

#include <fstream>
#include <json.hpp>

#include "sqfree/errors.hpp"

namespace sqfree {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kFormat = "sqfree-count-cache";
constexpr int kFormatVersion = 1;

std::string key_text(unsigned x, unsigned n) {
  return "(x=" + std::to_string(x) + ", n=" + std::to_string(n) + ")";
}

Count parse_field(const Json& value, const char* what) {
  if (!value.is_string()) {
    throw IntegrityError(std::string("field \"") + what +
                         "\" must be a decimal string");
  }
  try {
    return parse_count(value.get<std::string>());
  } catch (const InvalidArgument& e) {
    throw IntegrityError(e.what());
  }
}

}  // namespace

void validate_record(const CountRecord& r) {
  const std::string at = key_text(r.x, r.n);
  if (r.n > kMaxWordLength) throw IntegrityError("length out of range at " + at);
  if (r.n == 0 && r.total != 1) throw IntegrityError("empty word count must be 1 at " + at);
  if (r.n == 1 && r.total != r.x) throw IntegrityError("length-1 count must equal x at " + at);
  if (r.n >= 1) {
    // total <= x(x-1)^(n-1); a bound that overflows cannot be violated.
    std::optional<Count> bound = r.x;
    for (unsigned i = 1; i < r.n && bound; ++i) {
      bound = r.x == 0 ? Count{0} : checked_mul(*bound, r.x - 1);
    }
    if (bound && r.total > *bound) {
      throw IntegrityError("total exceeds x(x-1)^(n-1) at " + at);
    }
  }
  if (r.ext) {
    const std::size_t expected = r.n == 0 ? r.x + 1 : r.x;
    if (r.ext->size() != expected) {
      throw IntegrityError("expected " + std::to_string(expected) +
                           " extension classes at " + at);
    }
    Count sum = 0;
    for (Count c : *r.ext) {
      auto s = checked_add(sum, c);
      if (!s) throw IntegrityError("extension classes overflow at " + at);
      sum = *s;
    }
    if (sum != r.total) {
      throw IntegrityError("total != sum of extension classes at " + at);
    }
  }
}

CountCache::CountCache()
    : CountCache(std::string(engine_version()), SymmetryMode::fix_first_two) {}

CountCache::CountCache(std::string engine, SymmetryMode symmetry)
    : engine_(std::move(engine)), symmetry_(symmetry) {}

const CountRecord* CountCache::find(unsigned x, unsigned n) const {
  auto it = records_.find({x, n});
  return it == records_.end() ? nullptr : &it->second;
}

// omega_{n+1} = sum_k k * ext_k(n) links consecutive classified records.
void CountCache::check_neighbours(const CountRecord& r) const {
  auto successor_total = [](const CountRecord& prev) -> std::optional<Count> {
    Count sum = 0;
    for (std::size_t k = 0; k < prev.ext->size(); ++k) {
      auto term = checked_mul((*prev.ext)[k], k);
      if (!term) return std::nullopt;
      auto s = checked_add(sum, *term);
      if (!s) return std::nullopt;
      sum = *s;
    }
    return sum;
  };
  if (r.n > 0) {
    if (const CountRecord* prev = find(r.x, r.n - 1); prev && prev->ext) {
      auto expected = successor_total(*prev);
      if (expected && *expected != r.total) {
        throw IntegrityError("record contradicts the extension classes of " +
                             key_text(r.x, r.n - 1));
      }
    }
  }
  if (r.ext) {
    if (const CountRecord* next = find(r.x, r.n + 1)) {
      auto expected = successor_total(r);
      if (expected && *expected != next->total) {
        throw IntegrityError("extension classes at " + key_text(r.x, r.n) +
                             " contradict the total at n+1");
      }
    }
  }
}

void CountCache::put(const CountRecord& record) {
  validate_record(record);
  auto it = records_.find({record.x, record.n});
  if (it != records_.end()) {
    const CountRecord& old = it->second;
    if (old.total != record.total || (old.ext && record.ext && *old.ext != *record.ext)) {
      throw IntegrityError("cached record " + key_text(record.x, record.n) +
                           " disagrees: " + to_string(old.total) + " vs " +
                           to_string(record.total));
    }
    if (old.ext || !record.ext) return;
  }
  check_neighbours(record);
  records_[{record.x, record.n}] = record;
}

std::optional<std::vector<CountRecord>> CountCache::range(unsigned x,
                                                          unsigned n_max,
                                                          bool classified) const {
  std::vector<CountRecord> out;
  out.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    const CountRecord* r = find(x, n);
    if (r == nullptr || (classified && !r->ext)) return std::nullopt;
    out.push_back(*r);
    if (!classified) out.back().ext.reset();
  }
  return out;
}

std::string serialize_record(const CountRecord& r) {
  Json j;
  j["x"] = r.x;
  j["n"] = r.n;
  j["total"] = to_string(r.total);
  if (r.ext) {
    Json ext = Json::array();
    for (Count c : *r.ext) ext.push_back(to_string(c));
    j["ext"] = std::move(ext);
  }
  return j.dump();
}

CountRecord parse_record(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw IntegrityError(std::string("malformed cache record: ") + e.what());
  }
  if (!j.is_object() || !j.contains("x") || !j.contains("n") ||
      !j.contains("total") || !j["x"].is_number_unsigned() ||
      !j["n"].is_number_unsigned()) {
    throw IntegrityError("malformed cache record: " + line);
  }
  CountRecord r;
  r.x = j["x"].get<unsigned>();
  r.n = j["n"].get<unsigned>();
  r.total = parse_field(j["total"], "total");
  if (j.contains("ext")) {
    if (!j["ext"].is_array()) throw IntegrityError("\"ext\" must be an array");
    std::vector<Count> ext;
    for (const auto& v : j["ext"]) ext.push_back(parse_field(v, "ext"));
    r.ext = std::move(ext);
  }
  return r;
}

void checkpoint_save(const CountCache& cache, const std::filesystem::path& path) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    Json header;
    header["format"] = kFormat;
    header["version"] = kFormatVersion;
    header["engine"] = cache.engine();
    header["symmetry"] = std::string(to_string(cache.symmetry()));
    out << header.dump() << '\n';
    for (const auto& [key, record] : cache.records()) {
      out << serialize_record(record) << '\n';
    }
    if (!out.flush()) throw Error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

CountCache checkpoint_load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IntegrityError("cannot open cache " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw IntegrityError("empty cache file " + path.string());
  Json header;
  try {
    header = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw IntegrityError(std::string("malformed cache header: ") + e.what());
  }
  if (!header.is_object() || header.value("format", "") != kFormat ||
      header.value("version", 0) != kFormatVersion ||
      !header.contains("engine") || !header["engine"].is_string() ||
      !header.contains("symmetry") || !header["symmetry"].is_string()) {
    throw IntegrityError("not a sqfree count cache: " + path.string());
  }
  SymmetryMode mode;
  try {
    mode = parse_symmetry_mode(header["symmetry"].get<std::string>());
  } catch (const InvalidArgument& e) {
    throw IntegrityError(e.what());
  }
  CountCache cache(header["engine"].get<std::string>(), mode);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    cache.put(parse_record(line));
  }
  return cache;
}

void checkpoint_merge(CountCache& cache, const std::filesystem::path& path) {
  const CountCache loaded = checkpoint_load(path);
  for (const auto& [key, record] : loaded.records()) cache.put(record);
}

std::vector<CountRecord> cached_census(CountCache& cache, unsigned x,
                                       unsigned n_max, bool classified,
                                       const CountOptions& options) {
  if (auto hit = cache.range(x, n_max, classified)) return *std::move(hit);
  std::vector<CountRecord> fresh = classified ? classify_up_to(x, n_max, options)
                                              : count_up_to(x, n_max, options);
  for (const CountRecord& r : fresh) cache.put(r);
  return fresh;
}

}  // namespace sqfree
