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

#include "sqfree/entropy.hpp"

#include <cmath>
#include <numbers>

#include "sqfree/errors.hpp"

namespace sqfree {

namespace {

void require_consecutive(std::span<const CountRecord> records) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].n != i) {
      throw InvalidArgument("count records must be consecutive from n = 0");
    }
  }
}

}  // namespace

std::vector<std::optional<double>> ratio_estimates(std::span<const CountRecord> records) {
  std::vector<std::optional<double>> out(records.size());
  for (std::size_t i = 1; i < records.size(); ++i) {
    const CountRecord& prev = records[i - 1];
    const CountRecord& cur = records[i];
    if (prev.n + 1 != cur.n) continue;
    if (prev.total == 0 || cur.total == 0) {
      out[i] = 0.0;
    } else {
      out[i] = log_count(cur.total) - log_count(prev.total);
    }
  }
  return out;
}

double point_estimate(std::span<const CountRecord> records) {
  const auto ratios = ratio_estimates(records);
  if (ratios.empty() || !ratios.back()) {
    throw InvalidArgument("point estimate needs the last two lengths");
  }
  return *ratios.back();
}

std::vector<std::optional<double>> upper_bound_series(std::span<const CountRecord> records,
                                                      unsigned j) {
  if (j > 2) throw InvalidArgument("overlap j must be 0, 1 or 2");
  require_consecutive(records);
  std::vector<std::optional<double>> out(records.size());
  if (records.size() <= j) return out;
  const Count base = records[j].total;
  for (std::size_t n = j + 1; n < records.size(); ++n) {
    const Count top = records[n].total;
    if (top == 0 || base == 0) {
      out[n] = 0.0;
    } else {
      out[n] = (log_count(top) - log_count(base)) / static_cast<double>(n - j);
    }
  }
  return out;
}

UpperBound upper_bound(std::span<const CountRecord> records, unsigned j) {
  const auto series = upper_bound_series(records, j);
  if (series.empty() || !series.back()) {
    throw InvalidArgument("upper bound needs counts beyond n = j");
  }
  UpperBound ub;
  ub.value = *series.back();
  std::optional<double> prev;
  for (const auto& v : series) {
    if (!v) continue;
    if (prev && *v > *prev) ub.monotone = false;
    prev = v;
  }
  return ub;
}

double lower_bound_simple(unsigned x) {
  if (x < 3) throw InvalidArgument("the simple lower bound needs x >= 3");
  return std::log(static_cast<double>(x - 2)) / 3.0;
}

double default_ternary_lower_bound() { return std::numbers::ln2 / 21.0; }

double lower_bound_composite(unsigned x, double ternary_lower_bound) {
  if (x < 3) throw InvalidArgument("the composite lower bound needs x >= 3");
  double harmonic = 0.0;
  for (unsigned k = 3; k < x; ++k) harmonic += 1.0 / k;
  return ternary_lower_bound + std::numbers::ln2 * harmonic;
}

double euler_sigma(unsigned long m) {
  if (m == 0) throw InvalidArgument("sigma_m needs m >= 1");
  long double h = 0.0L;
  // Smallest terms first.
  for (unsigned long k = m; k >= 1; --k) h += 1.0L / static_cast<long double>(k);
  return static_cast<double>(h - std::log(static_cast<long double>(m)));
}

double s_tilde(double x) {
  if (x < 3.0) throw InvalidArgument("s_tilde needs x >= 3");
  // Double root at x = 3.
  if (x == 3.0) return 0.0;
  // log((y + sqrt(y^2 - 4)) / 2) with y = x - 1.
  return std::acosh((x - 1.0) / 2.0);
}

std::pair<unsigned, unsigned> default_fit_window(unsigned n_max) {
  return {n_max - n_max / 3, n_max};
}

FitResult fit_linear(std::span<const CountRecord> records, unsigned lo, unsigned hi) {
  std::vector<std::pair<double, double>> points;
  for (const CountRecord& r : records) {
    if (r.n < lo || r.n > hi || r.total == 0) continue;
    points.emplace_back(static_cast<double>(r.n), log_count(r.total));
  }
  if (lo > hi || points.size() < 2) {
    throw InvalidArgument("degenerate fit window [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
  }
  // Centered sums keep the normal equations well conditioned.
  double mean_n = 0.0, mean_y = 0.0;
  for (const auto& [n, y] : points) {
    mean_n += n;
    mean_y += y;
  }
  mean_n /= static_cast<double>(points.size());
  mean_y /= static_cast<double>(points.size());
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [n, y] : points) {
    sxx += (n - mean_n) * (n - mean_n);
    sxy += (n - mean_n) * (y - mean_y);
  }
  FitResult fit;
  fit.epsilon = sxy / sxx;
  fit.intercept = mean_y - fit.epsilon * mean_n;
  fit.window_lo = lo;
  fit.window_hi = hi;
  for (const auto& [n, y] : points) {
    fit.residual = std::max(fit.residual, std::abs(y - (fit.epsilon * n + fit.intercept)));
  }
  return fit;
}

ExtensionRatios extension_ratios(std::span<const CountRecord> records) {
  ExtensionRatios out;
  for (const CountRecord& r : records) {
    if (!r.ext) throw InvalidArgument("extension ratios need classified records");
    std::vector<double> row;
    if (r.total != 0) {
      const long double total = static_cast<long double>(r.total);
      for (Count c : *r.ext) row.push_back(static_cast<double>(static_cast<long double>(c) / total));
    }
    out.ratios.push_back(std::move(row));
  }
  if (!out.ratios.empty()) out.last = out.ratios.back();
  if (out.ratios.size() >= 2) {
    const auto& prev = out.ratios[out.ratios.size() - 2];
    if (prev.size() == out.last.size()) {
      for (std::size_t k = 0; k < prev.size(); ++k) out.last_change.push_back(out.last[k] - prev[k]);
    }
  }
  return out;
}

BoundsReport bounds_report(unsigned x, std::span<const CountRecord> records,
                           double ternary_lower_bound) {
  if (x < 3) throw InvalidArgument("bounds report needs x >= 3");
  require_consecutive(records);
  if (records.size() < 4) throw InvalidArgument("bounds report needs n_max >= 3");
  BoundsReport rep;
  rep.x = x;
  rep.n_max = records.back().n;
  rep.lower_bound = lower_bound_composite(x, ternary_lower_bound);
  rep.estimate = point_estimate(records);
  rep.upper_bound = upper_bound(records, 2).value;
  rep.log_x_minus_1 = std::log(static_cast<double>(x - 1));
  rep.s_tilde = s_tilde(x);
  if (rep.lower_bound > rep.upper_bound || rep.upper_bound > rep.log_x_minus_1 + 1e-12) {
    throw ConsistencyError("rigorous entropy bounds out of order for x=" + std::to_string(x));
  }
  rep.ordered = rep.lower_bound <= rep.estimate && rep.estimate <= rep.upper_bound;
  return rep;
}

}  // namespace sqfree
