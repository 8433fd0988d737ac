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
#include <vector>

#include "matqsym/composition.hpp"
#include "matqsym/integer.hpp"
#include "matqsym/intpoly.hpp"
#include "matqsym/matroid.hpp"
#include "matqsym/poset.hpp"
#include "matqsym/qsym.hpp"

namespace matqsym {

// Kernels come in an OpenMP version and a serial reference; results are
// identical (integer sums).
enum class Exec { Serial, Parallel };

// How each base poset P_B is strictly labelled before enumeration.
enum class BaseLabelling {
  ReverseExtension,  // n, n-1, ... along the first linear extension
  CobaseLow,         // elements outside B get 1..n-r, elements of B the rest
};

struct InvariantOptions {
  Exec exec = Exec::Parallel;
  BaseLabelling labelling = BaseLabelling::ReverseExtension;
  EnumerationLimits limits;  // per-poset linear-extension budget
};

LabelledPoset strict_base_poset(const Matroid& m, Mask b, BaseLabelling labelling);

// F(M) as the sum over bases of strict P_B enumerators, in the L basis.
QSymFn F(const Matroid& m, const InvariantOptions& opt = {});

struct BruteForceBudget {
  double max_functions = 1e7;  // cap on k^n
};

// Coefficient of M_a, for every a with at most k parts, counted directly as
// the number of M-generic f: E -> [k] taking value i exactly a_i times.
// Compositions with zero count are omitted.
std::map<Composition, Int> F_bruteforce(const Matroid& m, int k, Exec exec = Exec::Parallel,
                                        const BruteForceBudget& budget = {});
// Same range of compositions, each f weighted by its number of minimizing
// bases.
std::map<Composition, Int> F_star_bruteforce(const Matroid& m, int k, Exec exec = Exec::Parallel,
                                             const BruteForceBudget& budget = {});

// Number of flags whose subquotients all split completely, with rank jumps
// |A_i| = a_i.
Int flag_coefficient(const Matroid& m, const Composition& a);

// (-1)^n S(F(M)), in the L basis.
QSymFn F_star(const Matroid& m, const InvariantOptions& opt = {});

IntValuedPoly phi(const Matroid& m, const InvariantOptions& opt = {});
IntValuedPoly phi_star(const Matroid& m, const InvariantOptions& opt = {});

// phi(M, -m) = (-1)^n phi*(M, m).
bool check_reciprocity(const Matroid& m, const InvariantOptions& opt = {});

// Delta(F(M)) = sum_A F(M|A) (x) F(M/A).
bool check_coalgebra_map(const Matroid& m, const InvariantOptions& opt = {});
// F(M1 (+) M2) = F(M1) F(M2).
bool check_product(const Matroid& a, const Matroid& b, const InvariantOptions& opt = {});
// Coefficients of F(M*) are those of F(M) at reversed compositions.
bool check_duality(const Matroid& m, const InvariantOptions& opt = {});

struct LCoefficientReport {
  bool nonnegative = false;
  Int sum;
  Int expected_sum;  // n!
  Int all_ones;      // coefficient of L_{1,...,1}
  Int base_count;
  // Coefficients at compositions with at most two parts match the
  // loop/coloop/rank formula (coefficient of L_(n) only, when M splits
  // completely).
  bool first_coefficients = false;

  bool ok() const { return nonnegative && sum == expected_sum && all_ones == base_count && first_coefficients; }
  std::string str() const;
};

LCoefficientReport check_L_coefficients(const Matroid& m, const InvariantOptions& opt = {});

struct FreedomExpansion {
  std::vector<SigmaString> taus;         // lex order
  std::vector<Rational> coeffs;          // F(M_sigma) = sum coeffs[i] F(R_tau_i, strict)
  bool integral = false;
  bool triangular = false;               // zero beyond sigma
  Rational diagonal;
  Int expected_diagonal;                 // prod binom(|A_i|, z_i)

  bool ok() const { return integral && triangular && diagonal == Rational(expected_diagonal.to_big()); }
};

FreedomExpansion freedom_expansion(const SigmaString& s, const InvariantOptions& opt = {});

}  // namespace matqsym
