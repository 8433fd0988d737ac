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

#include "matqsym/composition.hpp"
#include "matqsym/integer.hpp"
#include "matqsym/qsym.hpp"

namespace matqsym {

// Rank r_n of (QSym / m^2)_n, from prod_n (1 - t^n)^{-r_n} = (1 - t)/(1 - 2t),
// i.e. sum_{d | n} d * r_d = 2^n - 1.
int quotient_rank(int n);

// A Z-basis of (QSym / m^2)_n together with the projection from
// L-coefficient vectors. The free basis is the set of L_a left unpivoted by
// integer row reduction of the products L_b L_e (b, e nonempty), columns
// visited in lex order and every pivot a unit.
struct QuotientPresentation {
  int n = 0;
  std::vector<Composition> free_basis;
  // rank() x 2^{n-1} integer matrix acting on dense L-coefficient vectors.
  std::vector<std::vector<Int>> projection;

  int rank() const { return static_cast<int>(free_basis.size()); }
};

struct QuotientVector {
  int n = 0;
  std::vector<Int> coords;

  bool is_zero() const;
  QuotientVector& operator+=(const QuotientVector& o);
  friend QuotientVector operator+(QuotientVector a, const QuotientVector& b) { return a += b; }
  friend QuotientVector operator*(const Int& c, QuotientVector a);
  friend bool operator==(const QuotientVector&, const QuotientVector&) = default;
  friend auto operator<=>(const QuotientVector&, const QuotientVector&) = default;
  std::string str() const;  // "(1, 0, -2)"
};

// Throws VerificationFailed if the rank disagrees with quotient_rank(n) or
// no unit pivot exists (the quotient would have torsion).
QuotientPresentation quotient_presentation(int n);
// Process-wide memoized variant.
const QuotientPresentation& cached_quotient_presentation(int n);

// Throws InvalidInput if f is not homogeneous of degree pres.n (zero is allowed).
QuotientVector project_mod_m2(const QSymFn& f, const QuotientPresentation& pres);

}  // namespace matqsym
