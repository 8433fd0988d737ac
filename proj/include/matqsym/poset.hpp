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

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matqsym/composition.hpp"
#include "matqsym/integer.hpp"
#include "matqsym/qsym.hpp"

namespace matqsym {

// A finite partial order on distinct positive integer labels (at most 64).
// The strict order is stored transitively closed: above(i) is the set of
// element indices strictly greater than element i, where element indices
// follow increasing label order.
class LabelledPoset {
 public:
  LabelledPoset() = default;
  // `relations` are label pairs (a, b) meaning a < b. Throws InvalidInput on
  // duplicate labels, unknown labels or cycles.
  LabelledPoset(std::vector<int> labels, const std::vector<std::pair<int, int>>& relations);

  static LabelledPoset antichain(std::vector<int> labels);
  static LabelledPoset chain(const std::vector<int>& bottom_to_top);
  static LabelledPoset antichain_on(int n);  // labels 1..n

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }
  int index_of(int label) const;  // -1 when absent
  std::uint64_t above(int idx) const { return above_[idx]; }
  std::uint64_t below(int idx) const;
  bool less(int a, int b) const;  // labels

  // All strict relations (a, b) with a < b, sorted.
  std::vector<std::pair<int, int>> relations() const;
  // Cover relations, sorted.
  std::vector<std::pair<int, int>> covers() const;

  bool is_natural() const;  // labels increase along every relation
  bool is_strict() const;   // labels decrease along every relation

  // Applies a label bijection; `relabel` maps every old label to its new one.
  LabelledPoset relabelled(const std::map<int, int>& relabel) const;

  // "n; i<j, i<j, ..." using covers; requires labels == [n].
  std::string str() const;
  static LabelledPoset parse(std::string_view text);

  friend bool operator==(const LabelledPoset&, const LabelledPoset&) = default;

 private:
  std::vector<int> labels_;
  std::vector<std::uint64_t> above_;
};

struct EnumerationLimits {
  int max_poset_size = 12;
  // Cap on k^|P| for the brute-force P-partition oracle.
  double max_bruteforce = 1e7;
};

// Backtracking over currently minimal elements, smallest label first.
std::vector<std::vector<int>> linear_extensions(const LabelledPoset& p,
                                                const EnumerationLimits& lim = {});

// Lengths of the maximal increasing runs of w.
Composition descent_composition(const std::vector<int>& w);

// counts[S] = number of linear extensions whose descent set is S, a subset
// of [n-1] as a bit mask; counts has 2^{n-1} entries (one for n = 0).
std::vector<std::uint64_t> descent_counts(const LabelledPoset& p, const EnumerationLimits& lim = {});

// F(P) = sum over linear extensions w of L_{alpha(w)}, in the L basis.
QSymFn enumerator(const LabelledPoset& p, const EnumerationLimits& lim = {});

// Brute force over f: P -> [k]. Keys are weak compositions (multiplicity of
// each value 1..k); each count must equal the M-coefficient of the enumerator
// at the composition obtained by deleting zeros.
std::map<std::vector<int>, Int> ppartition_count(const LabelledPoset& p, int k,
                                                 const EnumerationLimits& lim = {});

LabelledPoset disjoint_sum(const LabelledPoset& a, const LabelledPoset& b);
LabelledPoset ordinal_sum(const LabelledPoset& a, const LabelledPoset& b);
// Replaces the i-th smallest label by i.
LabelledPoset standardize(const LabelledPoset& p);
// For P on [n]: P (+) (n+m) (+) antichain{n+1, ..., n+m-1}.
LabelledPoset psi(const LabelledPoset& p, int m);

// Relabel by a linear extension so labels increase (natural) or decrease
// (strict) going up. Result is on [n].
LabelledPoset natural_labelling(const LabelledPoset& p);
LabelledPoset strict_labelling(const LabelledPoset& p);

// Binary word starting with 0, as used to index the appendix bases.
class SigmaString {
 public:
  explicit SigmaString(std::string bits);
  const std::string& bits() const { return bits_; }
  int size() const { return static_cast<int>(bits_.size()); }
  bool bit(int pos) const { return bits_[pos - 1] == '1'; }  // 1-based
  friend auto operator<=>(const SigmaString&, const SigmaString&) = default;

 private:
  std::string bits_;
};

// All 2^{n-1} strings of length n starting with 0, in lex order (0 < 1).
std::vector<SigmaString> all_sigmas(int n);

struct BlocksAndZ {
  std::vector<std::vector<int>> blocks;  // contiguous intervals of [n]
  std::vector<int> zeros;
};

BlocksAndZ blocks_and_z(const SigmaString& s);
SigmaString sigma_from_blocks(const BlocksAndZ& bz);

LabelledPoset r_sigma(const SigmaString& s);
LabelledPoset q_sigma(const SigmaString& s);
LabelledPoset stanley_p_alpha(const Composition& a);
std::vector<int> w_sigma_descents(const SigmaString& s);

}  // namespace matqsym
