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

#include "sqfree/polynomial.hpp"

#include <json.hpp>

#include "sqfree/errors.hpp"

namespace sqfree {

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> ascending)
    : coeffs_(std::move(ascending)) {
  normalize();
}

void IntegerPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntegerPolynomial IntegerPolynomial::constant(BigInt c) {
  return IntegerPolynomial(std::vector<BigInt>{std::move(c)});
}

IntegerPolynomial IntegerPolynomial::monomial(unsigned degree, BigInt c) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(c);
  return IntegerPolynomial(std::move(v));
}

IntegerPolynomial IntegerPolynomial::linear(long root) {
  return IntegerPolynomial(std::vector<BigInt>{BigInt(-root), BigInt(1)});
}

int IntegerPolynomial::degree() const {
  return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
}

BigInt IntegerPolynomial::coefficient(unsigned i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

BigInt IntegerPolynomial::leading() const {
  return coeffs_.empty() ? BigInt(0) : coeffs_.back();
}

BigInt IntegerPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::optional<IntegerPolynomial> IntegerPolynomial::divide_by_root(long root) const {
  if (coeffs_.empty()) return IntegerPolynomial();
  // Synthetic division from the top coefficient down.
  std::vector<BigInt> q(coeffs_.size() - 1);
  BigInt carry = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    carry = carry * root + coeffs_[i];
    if (i > 0) q[i - 1] = carry;
  }
  if (carry != 0) return std::nullopt;
  return IntegerPolynomial(std::move(q));
}

IntegerPolynomial& IntegerPolynomial::operator+=(const IntegerPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntegerPolynomial& IntegerPolynomial::operator-=(const IntegerPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntegerPolynomial& IntegerPolynomial::operator*=(const BigInt& c) {
  for (auto& v : coeffs_) v *= c;
  normalize();
  return *this;
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntegerPolynomial();
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntegerPolynomial(std::move(out));
}

std::string IntegerPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::string IntegerPolynomial::factored() const {
  if (coeffs_.empty()) return "0";
  IntegerPolynomial rest = *this;
  std::string out;
  const char* names[] = {"x", "(x-1)", "(x-2)"};
  for (long root = 0; root <= 2; ++root) {
    unsigned mult = 0;
    while (rest.degree() >= 1) {
      auto q = rest.divide_by_root(root);
      if (!q) break;
      rest = std::move(*q);
      ++mult;
    }
    if (mult == 0) continue;
    out += names[root];
    if (mult > 1) out += "^" + std::to_string(mult);
  }
  if (rest.degree() >= 1) {
    out += out.empty() ? rest.to_string() : "(" + rest.to_string() + ")";
  } else if (rest.coefficient(0) != 1 || out.empty()) {
    const std::string c = rest.coefficient(0).str();
    out = out.empty() ? c : (rest.coefficient(0) == -1 ? "-" + out : c + out);
  }
  return out;
}

std::string IntegerPolynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : coeffs_) arr.push_back(c.str());
  return arr.dump();
}

IntegerPolynomial IntegerPolynomial::from_json(std::string_view text) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("malformed polynomial: ") + e.what());
  }
  if (!arr.is_array()) throw InvalidArgument("polynomial must be a JSON array");
  std::vector<BigInt> coeffs;
  for (const auto& v : arr) {
    if (!v.is_string()) throw InvalidArgument("coefficients must be decimal strings");
    try {
      coeffs.emplace_back(v.get<std::string>());
    } catch (const std::runtime_error&) {
      throw InvalidArgument("malformed coefficient \"" + v.get<std::string>() + "\"");
    }
  }
  return IntegerPolynomial(std::move(coeffs));
}

}  // namespace sqfree
