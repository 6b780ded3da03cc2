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

#include "qperturb/poly.hpp"

#include <sstream>

namespace qperturb {

IntPoly::IntPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { Trim(); }

IntPoly IntPoly::Constant(const BigInt& c) { return IntPoly({c}); }

IntPoly IntPoly::Monomial(int degree, const BigInt& c) {
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::Linear(const BigInt& root) { return IntPoly({-root, 1}); }

void IntPoly::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

long double IntPoly::Evaluate(long double x) const {
  long double acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + static_cast<long double>(*it);
  }
  return acc;
}

IntPoly IntPoly::ComposeNegShift() const {
  const IntPoly inner({-1, -1});
  IntPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner + Constant(*it);
  }
  return acc;
}

IntPoly::LinearDivision IntPoly::DivideByLinear(const BigInt& root) const {
  if (coeffs_.empty()) return {IntPoly(), 0};
  // Synthetic division, highest degree first.
  std::vector<BigInt> q(coeffs_.size() - 1, 0);
  BigInt carry = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    carry = carry * root + coeffs_[k];
    if (k > 0) q[k - 1] = carry;
  }
  return {IntPoly(std::move(q)), carry};
}

IntPoly IntPoly::ShiftedUp(int k) const {
  if (is_zero()) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(k), 0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::Pow(int e) const {
  IntPoly out = Constant(1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> v = coeffs_;
  for (auto& c : v) c = -c;
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const BigInt& c, const IntPoly& p) { return IntPoly::Constant(c) * p; }

std::string IntPoly::ToString(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && k > 0;
    if (!unit) os << mag;
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace qperturb
