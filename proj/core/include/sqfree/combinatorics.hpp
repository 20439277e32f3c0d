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

#ifndef SQFREE_COMBINATORICS_HPP_
#define SQFREE_COMBINATORICS_HPP_

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "sqfree/counting.hpp"
#include "sqfree/polynomial.hpp"

namespace sqfree {

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt to_bigint(Count value);

// Inclusion-exclusion from total counts to exact-letter counts:
//   psi = sum_k (-1)^(x-k) C(x,k) omega[k],  x = omega.size() - 1,
// where omega[k] is the number of square-free length-n words over k
// letters. Throws ConsistencyError if the result is negative or not a
// multiple of x!.
BigInt psi_from_omega(std::span<const BigInt> omega);

// omega_n(x) = sum_k C(x,k) psi[k]. Entries of `psi` past x are ignored;
// missing entries (k >= psi.size()) are taken as zero, which holds for k > n.
BigInt omega_from_psi(std::span<const BigInt> psi, unsigned x);

// psi_n(k), the number of square-free words of length n that use exactly k
// distinct letters.
class PsiTable {
 public:
  // Throws ConsistencyError if value is negative, not a multiple of k!, or
  // nonzero with k > n.
  void set(unsigned n, unsigned k, BigInt value);

  bool contains(unsigned n, unsigned k) const { return values_.count({n, k}) != 0; }
  // Zero for k > n; throws InvalidArgument for other missing entries.
  BigInt at(unsigned n, unsigned k) const;
  // psi_n(0..k_max); throws InvalidArgument if an entry is missing.
  std::vector<BigInt> row(unsigned n, unsigned k_max) const;

  const std::map<std::pair<unsigned, unsigned>, BigInt>& values() const { return values_; }

 private:
  std::map<std::pair<unsigned, unsigned>, BigInt> values_;
};

// omega[n][k] = omega_n(k) for k = 0..x_max, filled by one exact count per
// alphabet size. First-occurrence symmetry is used for k >= 6 regardless of
// options.symmetry.
std::vector<std::vector<BigInt>> omega_grid(unsigned n_max, unsigned x_max,
                                            const CountOptions& options = {});

// psi_n(k) for every entry of `omega` (as produced by omega_grid).
PsiTable psi_table(const std::vector<std::vector<BigInt>>& omega);

// Unique polynomial of degree <= n through (k, counts[k]) for k = 0..n,
// built in the binomial basis sum_k psi_n(k) C(x,k). Throws
// ConsistencyError unless the result is monic of degree n and divisible by
// x(x-1) (n > 1) and x(x-1)(x-2) (n > 3).
IntegerPolynomial recover_polynomial(unsigned n, std::span<const BigInt> counts);

// x(x-1)...(x-k+1); k! C(x,k) as a polynomial with integer coefficients.
IntegerPolynomial falling_factorial_polynomial(unsigned k);

// R_{n-2} = P_{n+1} - (x-1) P_n + P_{n-1}. Requires n > 2; throws
// ConsistencyError if deg R > n - 2.
IntegerPolynomial recurrence_remainder(const IntegerPolynomial& p_prev,
                                       const IntegerPolynomial& p_cur,
                                       const IntegerPolynomial& p_next,
                                       unsigned n);

// Q_{n+1} = (x-1) Q_n - Q_{n-1}, Q_0 = 1, Q_{-1} = 0. Requires n >= -1.
IntegerPolynomial q_polynomial(int n);

// First N+1 power-series coefficients of 1 / (t^2 - (x-1) t + 1).
std::vector<BigInt> generating_series_coefficients(const BigInt& x, unsigned N);

}  // namespace sqfree

#endif  // SQFREE_COMBINATORICS_HPP_
