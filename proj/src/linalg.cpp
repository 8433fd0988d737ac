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

#include "matqsym/linalg.hpp"

#include "matqsym/errors.hpp"

namespace matqsym {

std::optional<std::vector<Rational>> solve_in_span(const std::vector<std::vector<Int>>& columns,
                                                   const std::vector<Int>& target) {
  const std::size_t k = columns.size();
  const std::size_t d = target.size();
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(k + 1));
  for (std::size_t j = 0; j < k; ++j) {
    if (columns[j].size() != d) throw InvalidInput("solve_in_span: column length mismatch");
    for (std::size_t i = 0; i < d; ++i) a[i][j] = Rational(columns[j][i].to_big());
  }
  for (std::size_t i = 0; i < d; ++i) a[i][k] = Rational(target[i].to_big());

  std::size_t row = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = row;
    while (piv < d && a[piv][c] == 0) ++piv;
    if (piv == d) return std::nullopt;  // dependent columns
    std::swap(a[row], a[piv]);
    const Rational inv = 1 / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == row || a[i][c] == 0) continue;
      const Rational q = a[i][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= q * a[row][j];
    }
    ++row;
  }
  for (std::size_t i = row; i < d; ++i) {
    if (a[i][k] != 0) return std::nullopt;
  }
  std::vector<Rational> x(k);
  for (std::size_t c = 0; c < k; ++c) x[c] = a[c][k];
  return x;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix out(a.size(), std::vector<Int>(cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw InvalidInput("mat_mul: shape mismatch");
    for (std::size_t t = 0; t < inner; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  }
  return out;
}

bool is_lower_unitriangular(const IntMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a[i].size(); ++j) {
      if (a[i][j] != Int(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool is_upper_unitriangular(const IntMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j <= i && j < a[i].size(); ++j) {
      if (a[i][j] != Int(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace matqsym
