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

#ifndef SQFREE_POLYNOMIAL_HPP_
#define SQFREE_POLYNOMIAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sqfree {

using BigInt = boost::multiprecision::cpp_int;

// Polynomial in one variable with arbitrary-precision integer coefficients,
// stored in ascending degree with no trailing zero coefficients.
class IntegerPolynomial {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<BigInt> ascending);

  static IntegerPolynomial constant(BigInt c);
  static IntegerPolynomial monomial(unsigned degree, BigInt c = 1);
  // x - root
  static IntegerPolynomial linear(long root);

  // kZeroDegree for the zero polynomial.
  int degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(unsigned i) const;
  BigInt leading() const;

  BigInt evaluate(const BigInt& x) const;

  // Quotient by (x - root) when root is a root, nullopt otherwise.
  std::optional<IntegerPolynomial> divide_by_root(long root) const;

  IntegerPolynomial& operator+=(const IntegerPolynomial& other);
  IntegerPolynomial& operator-=(const IntegerPolynomial& other);
  IntegerPolynomial& operator*=(const BigInt& c);
  friend IntegerPolynomial operator+(IntegerPolynomial a, const IntegerPolynomial& b) { return a += b; }
  friend IntegerPolynomial operator-(IntegerPolynomial a, const IntegerPolynomial& b) { return a -= b; }
  friend IntegerPolynomial operator*(IntegerPolynomial a, const BigInt& c) { return a *= c; }
  friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
  friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

  // Expanded form, descending: "x^4 - 3x^3 + 2x^2".
  std::string to_string() const;

  // Peels the factors x, x-1, x-2: "x^2(x-1)(x-2)", "x(x-1)(x-2)(x^2 - 3x + 3)".
  std::string factored() const;

  // JSON array of decimal strings, ascending degree.
  std::string to_json() const;
  static IntegerPolynomial from_json(std::string_view text);

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

}  // namespace sqfree

#endif  // SQFREE_POLYNOMIAL_HPP_
