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

#include "matqsym/intpoly.hpp"

#include <algorithm>

namespace matqsym {

IntValuedPoly::IntValuedPoly(std::vector<Int> binomial_coeffs) : coeffs_(std::move(binomial_coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

IntValuedPoly IntValuedPoly::interpolate(const std::vector<Int>& values) {
  // Newton forward differences at 0: coeff k = (Delta^k p)(0).
  std::vector<Int> diff = values;
  std::vector<Int> out;
  out.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    out.push_back(diff[0]);
    for (std::size_t i = 0; i + 1 < diff.size() - k; ++i) diff[i] = diff[i + 1] - diff[i];
  }
  return IntValuedPoly(std::move(out));
}

Int IntValuedPoly::operator()(const Int& m) const {
  Int sum = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) sum += coeffs_[k] * binomial(m, static_cast<int>(k));
  }
  return sum;
}

std::vector<Rational> IntValuedPoly::power_coeffs() const {
  std::vector<Rational> out(coeffs_.size());
  // falling[k] holds the power coefficients of m(m-1)...(m-k+1).
  std::vector<Rational> falling{1};
  Rational kfact = 1;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) {
      kfact *= static_cast<long>(k);
      std::vector<Rational> next(falling.size() + 1);
      for (std::size_t j = 0; j < falling.size(); ++j) {
        next[j + 1] += falling[j];
        next[j] -= falling[j] * static_cast<long>(k - 1);
      }
      falling = std::move(next);
    }
    const Rational scale = Rational(coeffs_[k].to_big()) / kfact;
    for (std::size_t j = 0; j < falling.size(); ++j) out[j] += scale * falling[j];
  }
  return out;
}

std::string IntValuedPoly::str() const {
  const auto pc = power_coeffs();
  std::string out;
  bool first = true;
  for (std::size_t j = pc.size(); j-- > 0;) {
    Rational c = pc[j];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono = j == 0 ? "" : (j == 1 ? "m" : "m^" + std::to_string(j));
    if (c != 1 || j == 0) {
      out += c.str();
      if (j > 0) out += "*";
    }
    out += mono;
    first = false;
  }
  return first ? "0" : out;
}

IntValuedPoly IntValuedPoly::reflected() const {
  std::vector<Int> values;
  for (int i = 0; i <= std::max(degree(), 0); ++i) values.push_back((*this)(Int(-i)));
  return interpolate(values);
}

IntValuedPoly IntValuedPoly::operator*(const IntValuedPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Int> values;
  for (int i = 0; i <= degree() + o.degree(); ++i) values.push_back((*this)(Int(i)) * o(Int(i)));
  return interpolate(values);
}

IntValuedPoly IntValuedPoly::operator*(const Int& c) const {
  std::vector<Int> v = coeffs_;
  for (auto& x : v) x *= c;
  return IntValuedPoly(std::move(v));
}

IntValuedPoly IntValuedPoly::operator+(const IntValuedPoly& o) const {
  std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return IntValuedPoly(std::move(v));
}

IntValuedPoly specialize_ones(const QSymFn& f) {
  // M_a(1^m) = binom(m, number of parts of a).
  const QSymFn fm = change_basis(f, Basis::Monomial);
  std::vector<Int> coeffs;
  for (const auto& [a, c] : fm.terms()) {
    if (coeffs.size() <= a.length()) coeffs.resize(a.length() + 1);
    coeffs[a.length()] += c;
  }
  return IntValuedPoly(std::move(coeffs));
}

}  // namespace matqsym
