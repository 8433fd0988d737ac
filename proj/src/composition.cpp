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

#include "matqsym/composition.hpp"

#include <algorithm>
#include <numeric>

#include "matqsym/errors.hpp"

namespace matqsym {

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw InvalidInput("composition parts must be positive");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::from_subset(int n, std::uint32_t mask) {
  if (n == 0) return {};
  std::vector<int> parts;
  int prev = 0;
  for (int i = 1; i < n; ++i) {
    if (mask >> (i - 1) & 1u) {
      parts.push_back(i - prev);
      prev = i;
    }
  }
  parts.push_back(n - prev);
  return Composition(std::move(parts));
}

std::uint32_t Composition::subset_mask() const {
  std::uint32_t mask = 0;
  int sum = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    sum += parts_[i];
    mask |= 1u << (sum - 1);
  }
  return mask;
}

std::string Composition::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                b.parts_.begin(), b.parts_.end());
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw InvalidInput("negative weight");
  if (n == 0) return {Composition{}};
  // Lex order on compositions is decreasing order of the partial-sum mask
  // read with position 1 as the most significant bit.
  std::vector<Composition> out;
  const std::uint32_t full = (n >= 2) ? ((1u << (n - 1)) - 1) : 0;
  out.reserve(full + 1);
  for (std::uint32_t m = 0; m <= full; ++m) out.push_back(Composition::from_subset(n, m));
  std::sort(out.begin(), out.end());
  return out;
}

Composition complement(const Composition& a) {
  const int n = a.weight();
  if (n == 0) return a;
  const std::uint32_t full = (1u << (n - 1)) - 1;
  return Composition::from_subset(n, ~a.subset_mask() & full);
}

Composition reverse(const Composition& a) {
  std::vector<int> parts(a.parts().rbegin(), a.parts().rend());
  return Composition(std::move(parts));
}

bool refines(const Composition& fine, const Composition& coarse) {
  if (fine.weight() != coarse.weight()) return false;
  const std::uint32_t c = coarse.subset_mask();
  return (fine.subset_mask() & c) == c;
}

std::size_t lex_index(const Composition& a) {
  // Count compositions of the same weight that are lexicographically smaller:
  // at each position, every choice of a smaller part p leaves 2^(rest-1)
  // completions (or exactly one when nothing remains).
  int remaining = a.weight();
  std::size_t idx = 0;
  for (int part : a.parts()) {
    for (int p = 1; p < part; ++p) {
      const int rest = remaining - p;
      idx += rest == 0 ? 1 : (std::size_t{1} << (rest - 1));
    }
    remaining -= part;
  }
  return idx;
}

}  // namespace matqsym
