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

#include "sqfree/combinatorics.hpp"

#include "sqfree/errors.hpp"

namespace sqfree {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt to_bigint(Count value) {
  BigInt hi = static_cast<unsigned long long>(value >> 64);
  BigInt lo = static_cast<unsigned long long>(value);
  return (hi << 64) + lo;
}

BigInt psi_from_omega(std::span<const BigInt> omega) {
  if (omega.empty()) throw InvalidArgument("psi_from_omega needs omega_n(0)");
  const auto x = static_cast<unsigned>(omega.size() - 1);
  BigInt psi = 0;
  for (unsigned k = 0; k <= x; ++k) {
    const BigInt term = binomial(x, k) * omega[k];
    if ((x - k) % 2 == 0) {
      psi += term;
    } else {
      psi -= term;
    }
  }
  if (psi < 0) {
    throw ConsistencyError("psi(" + std::to_string(x) + ") = " + psi.str() +
                           " is negative; the omega values are inconsistent");
  }
  if (psi % factorial(x) != 0) {
    throw ConsistencyError("psi(" + std::to_string(x) + ") = " + psi.str() +
                           " is not a multiple of " + std::to_string(x) + "!");
  }
  return psi;
}

BigInt omega_from_psi(std::span<const BigInt> psi, unsigned x) {
  BigInt omega = 0;
  const auto top = std::min<std::size_t>(x + 1, psi.size());
  for (unsigned k = 0; k < top; ++k) omega += binomial(x, k) * psi[k];
  return omega;
}

void PsiTable::set(unsigned n, unsigned k, BigInt value) {
  const std::string at = "psi_" + std::to_string(n) + "(" + std::to_string(k) + ")";
  if (value < 0) throw ConsistencyError(at + " is negative");
  if (k > n && value != 0) throw ConsistencyError(at + " must vanish for k > n");
  if (value % factorial(k) != 0) throw ConsistencyError(at + " is not a multiple of k!");
  values_[{n, k}] = std::move(value);
}

BigInt PsiTable::at(unsigned n, unsigned k) const {
  auto it = values_.find({n, k});
  if (it != values_.end()) return it->second;
  if (k > n) return 0;
  throw InvalidArgument("psi_" + std::to_string(n) + "(" + std::to_string(k) +
                        ") has not been computed");
}

std::vector<BigInt> PsiTable::row(unsigned n, unsigned k_max) const {
  std::vector<BigInt> out;
  out.reserve(k_max + 1);
  for (unsigned k = 0; k <= k_max; ++k) out.push_back(at(n, k));
  return out;
}

std::vector<std::vector<BigInt>> omega_grid(unsigned n_max, unsigned x_max,
                                            const CountOptions& options) {
  std::vector<std::vector<BigInt>> grid(n_max + 1, std::vector<BigInt>(x_max + 1));
  for (unsigned k = 0; k <= x_max; ++k) {
    CountOptions opts = options;
    if (k >= 6) opts.symmetry = SymmetryMode::first_occurrence;
    const auto records = count_up_to(k, n_max, opts);
    for (unsigned n = 0; n <= n_max; ++n) grid[n][k] = to_bigint(records[n].total);
  }
  return grid;
}

PsiTable psi_table(const std::vector<std::vector<BigInt>>& omega) {
  PsiTable table;
  for (unsigned n = 0; n < omega.size(); ++n) {
    const auto& row = omega[n];
    for (unsigned k = 0; k < row.size(); ++k) {
      table.set(n, k, psi_from_omega(std::span<const BigInt>(row).first(k + 1)));
    }
  }
  return table;
}

IntegerPolynomial falling_factorial_polynomial(unsigned k) {
  IntegerPolynomial p = IntegerPolynomial::constant(1);
  for (unsigned i = 0; i < k; ++i) p = p * IntegerPolynomial::linear(i);
  return p;
}

IntegerPolynomial recover_polynomial(unsigned n, std::span<const BigInt> counts) {
  if (counts.size() < n + 1) {
    throw InvalidArgument("recover_polynomial(" + std::to_string(n) +
                          ") needs counts for alphabet sizes 0.." + std::to_string(n));
  }
  const std::string which = "P_" + std::to_string(n);
  IntegerPolynomial p;
  for (unsigned k = 0; k <= n; ++k) {
    // psi_n(k) C(x,k) = (psi_n(k)/k!) x(x-1)...(x-k+1), exact by divisibility.
    const BigInt psi = psi_from_omega(counts.first(k + 1));
    p += falling_factorial_polynomial(k) * BigInt(psi / factorial(k));
  }
  if (p.degree() != static_cast<int>(n)) {
    throw ConsistencyError(which + " has degree " + std::to_string(p.degree()));
  }
  if (p.leading() != 1) throw ConsistencyError(which + " is not monic");
  for (unsigned k = 0; k <= n; ++k) {
    if (p.evaluate(k) != counts[k]) {
      throw ConsistencyError(which + " does not reproduce its input at x=" + std::to_string(k));
    }
  }
  IntegerPolynomial rest = p;
  const long roots = n > 3 ? 3 : (n > 1 ? 2 : 0);
  for (long r = 0; r < roots; ++r) {
    auto q = rest.divide_by_root(r);
    if (!q) {
      throw ConsistencyError(which + " is not divisible by (x-" + std::to_string(r) + ")");
    }
    rest = std::move(*q);
  }
  return p;
}

IntegerPolynomial recurrence_remainder(const IntegerPolynomial& p_prev,
                                       const IntegerPolynomial& p_cur,
                                       const IntegerPolynomial& p_next,
                                       unsigned n) {
  if (n <= 2) throw InvalidArgument("the P recurrence remainder needs n > 2");
  IntegerPolynomial r = p_next - IntegerPolynomial::linear(1) * p_cur + p_prev;
  if (r.degree() > static_cast<int>(n) - 2) {
    throw ConsistencyError("remainder R_" + std::to_string(n - 2) + " has degree " +
                           std::to_string(r.degree()) + " > " + std::to_string(n - 2));
  }
  return r;
}

IntegerPolynomial q_polynomial(int n) {
  if (n < -1) throw InvalidArgument("Q_n is defined for n >= -1");
  IntegerPolynomial prev;  // Q_{-1}
  IntegerPolynomial cur = IntegerPolynomial::constant(1);
  if (n == -1) return prev;
  const IntegerPolynomial step = IntegerPolynomial::linear(1);
  for (int i = 0; i < n; ++i) {
    IntegerPolynomial next = step * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<BigInt> generating_series_coefficients(const BigInt& x, unsigned N) {
  // Power-series inverse of d(t) = 1 - (x-1) t + t^2: c_0 = 1/d_0 and
  // c_m = -sum_{i>=1} d_i c_{m-i}.
  const BigInt d[3] = {1, -(x - 1), 1};
  std::vector<BigInt> c(N + 1);
  c[0] = 1;
  for (unsigned m = 1; m <= N; ++m) {
    BigInt acc = 0;
    for (unsigned i = 1; i <= 2 && i <= m; ++i) acc -= d[i] * c[m - i];
    c[m] = acc;
  }
  return c;
}

}  // namespace sqfree
