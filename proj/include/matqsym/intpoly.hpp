// Copyright 2026 The matqsym Authors.
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

#include "matqsym/integer.hpp"
#include "matqsym/qsym.hpp"

namespace matqsym {

using Rational = boost::multiprecision::cpp_rational;

// Integer-valued polynomial in m, stored in the binomial basis:
// p(m) = sum_k coeffs[k] * binom(m, k). Trailing zeros are trimmed.
class IntValuedPoly {
 public:
  IntValuedPoly() = default;
  explicit IntValuedPoly(std::vector<Int> binomial_coeffs);

  // Unique polynomial of degree <= values.size()-1 with p(i) = values[i].
  static IntValuedPoly interpolate(const std::vector<Int>& values);

  const std::vector<Int>& binomial_coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }

  Int operator()(const Int& m) const;

  // Coefficients of 1, m, m^2, ... over the rationals.
  std::vector<Rational> power_coeffs() const;
  std::string str() const;  // power basis, e.g. "m^2 - m"

  IntValuedPoly reflected() const;  // m -> -m
  IntValuedPoly operator*(const IntValuedPoly& o) const;
  IntValuedPoly operator*(const Int& c) const;
  IntValuedPoly operator+(const IntValuedPoly& o) const;

  friend bool operator==(const IntValuedPoly&, const IntValuedPoly&) = default;

 private:
  std::vector<Int> coeffs_;
};

// Setting x_1 = ... = x_m = 1 and all other variables to 0.
IntValuedPoly specialize_ones(const QSymFn& f);

}  // namespace matqsym
