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
#include <utility>
#include <vector>

#include "matqsym/composition.hpp"
#include "matqsym/linalg.hpp"
#include "matqsym/poset.hpp"
#include "matqsym/qsym.hpp"

namespace matqsym {

// Change-of-basis matrices in degree n. Rows and columns follow lex order on
// compositions and on sigma strings.
//   A: F(R_sigma) (natural labelling) in the L basis, rows = compositions.
//   L: F(Q_sigma) in the L basis.
//   U: F(R_sigma) in the F(Q_tau) basis, rows = tau.
struct AppendixMatrices {
  int n = 0;
  std::vector<Composition> compositions;
  std::vector<SigmaString> sigmas;
  IntMatrix A, L, U;

  bool factorizes() const { return mat_mul(L, U) == A; }
  bool triangular() const { return is_lower_unitriangular(L) && is_upper_unitriangular(U); }
};

// Throws VerificationFailed if U is not integral.
AppendixMatrices appendix_matrices(int n);

std::string matrix_str(const IntMatrix& m);

enum class PosetBasis { R, Q, P };

// Expansion of a degree-n function in the enumerators of R_sigma (natural),
// Q_sigma or Stanley's P_a; nonzero terms only, keyed by sigma bits or
// composition text. Throws VerificationFailed if the family is not a basis.
std::vector<std::pair<std::string, Rational>> expand_in(PosetBasis basis, const QSymFn& f, int n);
QSymFn basis_element(PosetBasis basis, const std::string& key);
std::string expansion_str(PosetBasis basis, const std::vector<std::pair<std::string, Rational>>& terms);

}  // namespace matqsym
