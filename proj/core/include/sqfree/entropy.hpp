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

#ifndef SQFREE_ENTROPY_HPP_
#define SQFREE_ENTROPY_HPP_

#include <optional>
#include <span>
#include <vector>

#include "sqfree/counting.hpp"

namespace sqfree {

// All entropies are in nats. Wherever a count is zero the entropy is taken
// to be 0 (the language is finite).

// Element i is log(omega_n / omega_{n-1}) for records[i] (n = records[i].n),
// or nullopt when records[i-1] is not the record for n-1.
std::vector<std::optional<double>> ratio_estimates(std::span<const CountRecord> records);

// Last available log-ratio. Throws InvalidArgument with fewer than two
// consecutive records.
double point_estimate(std::span<const CountRecord> records);

struct UpperBound {
  double value = 0.0;
  // False if the bound obtained from some shorter prefix of the records was
  // smaller than the bound at a longer one.
  bool monotone = true;
};

// (log omega_{n_max} - log omega_j) / (n_max - j) with n_max the last
// record's length; j in {0, 1, 2}. Records must be consecutive from n = 0.
UpperBound upper_bound(std::span<const CountRecord> records, unsigned j = 2);

// The same bound with n_max = n for every n > j (index = n).
std::vector<std::optional<double>> upper_bound_series(std::span<const CountRecord> records,
                                                      unsigned j = 2);

// log(x-2)/3, for x >= 3.
double lower_bound_simple(unsigned x);

double default_ternary_lower_bound();  // log(2)/21

// eps + log(2) (1/3 + ... + 1/(x-1)), for x >= 3.
double lower_bound_composite(unsigned x, double ternary_lower_bound = default_ternary_lower_bound());

// H_m - log m, for m >= 1.
double euler_sigma(unsigned long m);

// log of the dominant root of t^2 - (x-1) t + 1, for x >= 3 (0 at x = 3).
double s_tilde(double x);

struct FitResult {
  double epsilon = 0.0;
  double intercept = 0.0;
  unsigned window_lo = 0;
  unsigned window_hi = 0;
  // Largest |log omega_n - (epsilon n + intercept)| over the window.
  double residual = 0.0;
};

// Top third of the available lengths: [n_max - n_max/3, n_max].
std::pair<unsigned, unsigned> default_fit_window(unsigned n_max);

// Least squares of log omega_n against n over records with n in [lo, hi].
// Throws InvalidArgument unless at least two of them have positive counts.
FitResult fit_linear(std::span<const CountRecord> records, unsigned lo, unsigned hi);

struct ExtensionRatios {
  // ratios[i][k] = ext_k / total for records[i]; empty when total is zero.
  std::vector<std::vector<double>> ratios;
  // Ratios of the last record and their change from the one before it.
  std::vector<double> last;
  std::vector<double> last_change;
};

// Requires classified records.
ExtensionRatios extension_ratios(std::span<const CountRecord> records);

struct BoundsReport {
  unsigned x = 0;
  unsigned n_max = 0;
  double lower_bound = 0.0;
  double estimate = 0.0;
  double upper_bound = 0.0;
  double log_x_minus_1 = 0.0;
  double s_tilde = 0.0;
  // lower_bound <= estimate <= upper_bound <= log_x_minus_1
  bool ordered = true;
};

// Requires x >= 3 and records n = 0..n_max with n_max >= 3. Throws
// ConsistencyError if a rigorous bound is violated (lower > upper or
// upper > log(x-1)); a point estimate outside the bounds only clears
// `ordered`.
BoundsReport bounds_report(unsigned x, std::span<const CountRecord> records,
                           double ternary_lower_bound = default_ternary_lower_bound());

}  // namespace sqfree

#endif  // SQFREE_ENTROPY_HPP_
