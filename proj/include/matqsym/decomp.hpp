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
#include <string>
#include <string_view>
#include <vector>

#include "matqsym/invariant.hpp"
#include "matqsym/matroid.hpp"
#include "matqsym/quotient.hpp"

namespace matqsym {

struct DecompositionCertificate {
  Matroid parent;
  std::vector<Matroid> pieces;

  std::string str() const;  // {"parent": {...}, "pieces": [{...}, ...]}
};

DecompositionCertificate parse_certificate_json(std::string_view text);

// Image of F(M) in (QSym/m^2)_n.
QuotientVector barF(const Matroid& m, const InvariantOptions& opt = {});

// Dimension of the base polytope: n minus the number of separators.
int polytope_dimension(const Matroid& m);

enum class CertificateStatus { Verified, Invalid, IdentityFailure };

struct ValuationCheck {
  CertificateStatus status = CertificateStatus::Invalid;
  std::string detail;
};

// Checks the piece conditions (same n and rank, bases inside the parent,
// union is the parent, full-dimensional pieces, every nonempty intersection
// a matroid, pairwise intersections of lower dimension) and then the
// inclusion-exclusion identity for F.
ValuationCheck check_valuation(const DecompositionCertificate& cert, const InvariantOptions& opt = {});

struct HyperplaneSplit {
  Mask s = 0;
  int k = 0;
  DecompositionCertificate cert;  // pieces {|B & S| <= k}, {|B & S| >= k}
};

// All splits by hyperplanes sum_{e in S} x_e = k, deduplicated by the
// unordered pair of pieces. n <= 10.
std::vector<HyperplaneSplit> find_hyperplane_splits(const Matroid& m);

struct SemigroupInstance {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<QuotientVector> vectors;

  void add(std::string label, QuotientVector v);
};

// barF of each matroid, labelled by position and JSON.
SemigroupInstance semigroup_of(const std::vector<Matroid>& ms, const InvariantOptions& opt = {});
// barF of the connected weak images of M other than M itself.
SemigroupInstance weak_image_generators(const Matroid& m, const InvariantOptions& opt = {});

enum class SearchStatus { Found, NotFound, BudgetExhausted };

struct SearchBudget {
  int max_terms = 16;
  std::uint64_t max_nodes = 50'000'000;
};

struct SearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::vector<std::size_t> witness;  // generator indices, nondecreasing
  bool positive_functional = false;  // search was bounded by a positive functional
  bool exhaustive = true;            // false when max_terms cut some branch
};

// Multiset of at least `min_terms` generators (zero vectors ignored) whose
// sum is `target`. NotFound means none within max_terms; BudgetExhausted
// means the node budget ran out first.
SearchResult decomposable_search(const QuotientVector& target, const SemigroupInstance& gens,
                                 const SearchBudget& budget = {}, int min_terms = 2);

// Indices of the generators whose vectors are nonzero and not a sum of two or
// more generators; one index (the first) per distinct vector. Throws
// BudgetExceeded when any search runs out of budget.
std::vector<std::size_t> hilbert_basis(const SemigroupInstance& gens, const SearchBudget& budget = {});

}  // namespace matqsym
