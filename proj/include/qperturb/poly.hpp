// Copyright 2026 The qperturb Authors.
//
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

#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qperturb {

using BigInt = boost::multiprecision::cpp_int;

// Dense polynomial in one variable with arbitrary-precision integer
// coefficients, ascending degree. Trailing zero coefficients are trimmed, so
// the zero polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> ascending);

  static IntPoly Constant(const BigInt& c);
  static IntPoly Monomial(int degree, const BigInt& c = 1);
  // x - root
  static IntPoly Linear(const BigInt& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  // Coefficient of x^k; zero beyond the degree.
  BigInt coeff(int k) const;
  BigInt leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

  // Horner evaluation in long double.
  long double Evaluate(long double x) const;

  // p(-x - 1)
  IntPoly ComposeNegShift() const;

  // Division by (x - root). The remainder is p(root).
  struct LinearDivision;
  LinearDivision DivideByLinear(const BigInt& root) const;

  IntPoly ShiftedUp(int k) const;  // x^k * p
  IntPoly Pow(int e) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& c, const IntPoly& p);
  IntPoly operator-() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  // "x^4 - 6*x^2 - 8*x - 3"
  std::string ToString(const std::string& var = "x") const;

 private:
  void Trim();
  std::vector<BigInt> coeffs_;
};

struct IntPoly::LinearDivision {
  IntPoly quotient;
  BigInt remainder;
};

}  // namespace qperturb
