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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace matqsym {

// A finite sequence of positive integers. Ordered by weight first, then
// lexicographically on parts, so that (1,1) < (2) and terms of a graded
// function group by degree.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  // The composition of n whose partial sums are the elements of `mask`
  // (bit i-1 set <=> i in the subset of [n-1]).
  static Composition from_subset(int n, std::uint32_t mask);

  std::span<const int> parts() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  // Partial-sum subset of [n-1] as a bit mask.
  std::uint32_t subset_mask() const;

  std::string str() const;  // "[1,2]"

  friend bool operator==(const Composition&, const Composition&) = default;
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// All compositions of n in lexicographic order; {()} for n = 0.
std::vector<Composition> compositions_of(int n);

// Complement with respect to [n-1]; the empty composition maps to itself.
Composition complement(const Composition& a);
Composition reverse(const Composition& a);

// True when `fine` refines `coarse` (same weight, partial sums superset).
bool refines(const Composition& fine, const Composition& coarse);

// Position of a composition of n inside compositions_of(n).
std::size_t lex_index(const Composition& a);

}  // namespace matqsym
