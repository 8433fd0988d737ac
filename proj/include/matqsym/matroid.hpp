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

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matqsym/integer.hpp"
#include "matqsym/poset.hpp"

namespace matqsym {

// Subsets of the ground set [n]; element e is bit e-1.
using Mask = std::uint32_t;

inline constexpr int kMaxGround = 20;

inline Mask element_bit(int e) { return Mask{1} << (e - 1); }
inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
std::vector<int> mask_elements(Mask m);  // 1-based, increasing
Mask mask_of(const std::vector<int>& elements);
std::string mask_str(Mask m);  // "{1,3}"

struct ExchangeFailure {
  Mask b1 = 0, b2 = 0;
  int e = 0;  // in b1 \ b2, with no partner in b2 \ b1
  std::string str() const;
};

// First violation of the base axioms, or nullopt when `bases` (sorted,
// distinct) is the base family of a matroid on [n].
std::optional<ExchangeFailure> exchange_violation(int n, const std::vector<Mask>& bases);

class Matroid {
 public:
  Matroid() : bases_{0} {}  // the empty matroid

  // Validates: nonempty, equal cardinalities, elements in [n], exchange axiom.
  static Matroid from_bases(int n, std::vector<Mask> bases);
  static Matroid from_base_lists(int n, const std::vector<std::vector<int>>& bases);
  // No validation; `bases` must already be a base family.
  static Matroid unchecked(int n, std::vector<Mask> bases);

  static Matroid uniform(int r, int n);
  static Matroid loop() { return unchecked(1, {0}); }
  static Matroid isthmus() { return unchecked(1, {1}); }

  int n() const { return n_; }
  int rank() const { return rank_; }
  const std::vector<Mask>& bases() const { return bases_; }
  std::size_t base_count() const { return bases_.size(); }
  bool is_base(Mask b) const;
  int rank_of(Mask a) const;
  bool is_independent(Mask a) const { return rank_of(a) == std::popcount(a); }
  Mask ground() const { return full_mask(n_); }

  std::string str() const;  // JSON object on one line

  friend bool operator==(const Matroid&, const Matroid&) = default;
  friend auto operator<=>(const Matroid&, const Matroid&) = default;

 private:
  Matroid(int n, int r, std::vector<Mask> bases) : n_(n), rank_(r), bases_(std::move(bases)) {}

  int n_ = 0;
  int rank_ = 0;
  std::vector<Mask> bases_;
};

// JSON: {"n": 4, "bases": [[1,2],[1,3]]}.
Matroid parse_matroid_json(std::string_view text);

// A minor on the elements `labels` of the parent, renumbered 1..|labels| in
// increasing label order.
struct Minor {
  Matroid matroid;
  std::vector<int> labels;
};

Matroid dual(const Matroid& m);
Matroid direct_sum(const Matroid& a, const Matroid& b);  // b's elements shifted by a.n()
Minor restrict_to(const Matroid& m, Mask a);
Minor contract(const Matroid& m, Mask a);
Minor delete_set(const Matroid& m, Mask a);
Matroid relabel(const Matroid& m, const std::vector<int>& perm);  // e -> perm[e-1]

Mask loops(const Matroid& m);
Mask coloops(const Matroid& m);
bool splits_completely(const Matroid& m);

// Finest partition of [n] into separators, sorted by least element.
std::vector<Mask> min_separators(const Matroid& m);
bool is_separator(const Matroid& m, Mask a);  // r(A) + r(E \ A) = r
bool is_connected(const Matroid& m);  // exactly one separator

struct WeightFunction {
  std::vector<int> values;  // values[e-1] >= 1
};

struct MinWeightBases {
  std::int64_t weight = 0;
  std::vector<Mask> bases;
};

MinWeightBases min_weight_bases(const Matroid& m, const WeightFunction& f);
bool is_generic(const Matroid& m, const WeightFunction& f);
// Kruskal-style: scan elements by (weight, index) and keep independent ones.
Mask greedy_base(const Matroid& m, const WeightFunction& f);

// e < e' iff e in B, e' not in B and B - e + e' is a base. Labels are 1..n.
LabelledPoset base_poset(const Matroid& m, Mask b);

struct Intersection {
  std::vector<Mask> bases;
  std::optional<Matroid> matroid;  // set when the family is a matroid
  std::optional<ExchangeFailure> failure;
};

// Requires equal n and rank.
Intersection intersect(const Matroid& a, const Matroid& b);

Matroid add_isthmus(const Matroid& m);
// New element n+1 freely placed at unchanged rank; a loop when rank is 0.
Matroid principal_extension(const Matroid& m);
Matroid freedom_matroid(const SigmaString& s);
Matroid freedom_bases_direct(const SigmaString& s);

// Lexicographically least sorted base list over relabellings that respect
// an isomorphism-invariant element ordering.
std::vector<Mask> canonical_form(const Matroid& m);
// When isomorphic and `witness` is non-null, stores perm with
// relabel(a, perm) == b.
bool is_isomorphic(const Matroid& a, const Matroid& b, std::vector<int>* witness = nullptr);

struct EnumerationBudget {
  int max_n = 9;
  // Hyperplane subsets tried per parent during single-element extension.
  std::uint64_t max_extension_subsets = std::uint64_t{1} << 22;
};

// All matroids of rank r on [n] up to isomorphism, each in canonical form,
// sorted by canonical form. Built from single-element extensions and
// coloop sums of smaller catalogs.
std::vector<Matroid> enumerate_matroids(int n, int r, bool connected_only, const EnumerationBudget& budget = {});
// Reference enumerator: every subfamily of r-subsets, validated. Needs
// binom(n, r) <= 20.
std::vector<Matroid> enumerate_matroids_exhaustive(int n, int r, bool connected_only);

// Matroids on [n] of the same rank whose bases form a nonempty subfamily of
// B(M), M included, sorted by base list. Labelled copies of the rank-r
// catalog are filtered by containment, so n <= 8.
std::vector<Matroid> weak_images(const Matroid& m, bool connected_only);

// Sizes of the parallel classes of a loopless rank-2 matroid, decreasing.
std::vector<int> lambda_partition(const Matroid& m);
// Loopless rank-2 matroid on [n] whose parallel classes are consecutive
// intervals of the given sizes.
Matroid rank2_from_lambda(const std::vector<int>& lambda);

class TuttePoly {
 public:
  using Terms = std::map<std::pair<int, int>, Int>;  // (i, j) -> coeff of x^i y^j

  TuttePoly() = default;
  explicit TuttePoly(Terms t);
  const Terms& terms() const { return terms_; }
  TuttePoly swapped() const;
  std::string str() const;  // e.g. "x^2 + x + y"
  friend bool operator==(const TuttePoly&, const TuttePoly&) = default;
  friend auto operator<=>(const TuttePoly&, const TuttePoly&) = default;

 private:
  Terms terms_;
};

// Corank-nullity sum; n <= 16.
TuttePoly tutte(const Matroid& m);

}  // namespace matqsym
