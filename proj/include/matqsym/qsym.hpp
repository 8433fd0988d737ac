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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "matqsym/composition.hpp"
#include "matqsym/integer.hpp"

namespace matqsym {

enum class Basis { Monomial, Fundamental };

char basis_letter(Basis b);

// A quasisymmetric function with integer coefficients, stored sparsely in
// either the monomial (M) or fundamental (L) basis. Zero coefficients are
// never stored. Inhomogeneous values are allowed; keys are ordered by
// (weight, lex) so graded pieces are contiguous.
class QSymFn {
 public:
  using Terms = std::map<Composition, Int>;

  explicit QSymFn(Basis basis = Basis::Monomial) : basis_(basis) {}
  QSymFn(Basis basis, Terms terms);

  static QSymFn one(Basis basis = Basis::Monomial);
  static QSymFn M(const Composition& a, const Int& c = 1);
  static QSymFn L(const Composition& a, const Int& c = 1);

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  Int coeff(const Composition& a) const;
  void add(const Composition& a, const Int& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  // Common weight of all keys; nullopt for zero or inhomogeneous values.
  std::optional<int> degree() const;
  std::vector<int> degrees() const;
  QSymFn graded_piece(int n) const;

  // Dense coefficient vector over compositions_of(n) in lex order.
  std::vector<Int> dense(int n) const;
  static QSymFn from_dense(Basis basis, int n, const std::vector<Int>& v);

  QSymFn& operator+=(const QSymFn& o);
  QSymFn& operator-=(const QSymFn& o);
  QSymFn& operator*=(const Int& c);
  friend QSymFn operator+(QSymFn a, const QSymFn& b) { return a += b; }
  friend QSymFn operator-(QSymFn a, const QSymFn& b) { return a -= b; }
  friend QSymFn operator*(QSymFn a, const Int& c) { return a *= c; }
  friend QSymFn operator*(const Int& c, QSymFn a) { return a *= c; }
  QSymFn operator-() const { return *this * Int(-1); }

  // Equality of the underlying functions (converts bases when they differ).
  friend bool operator==(const QSymFn& a, const QSymFn& b);

  // Canonical text, e.g. "3*M[1,2] + 6*M[1,1,1]"; "0" for zero, "M[]" for 1.
  std::string str() const;
  static QSymFn parse(std::string_view text);

 private:
  Basis basis_;
  Terms terms_;
};

// Order used by the text rendering: weight, then number of parts, then lex.
bool render_before(const Composition& a, const Composition& b);

QSymFn change_basis(const QSymFn& f, Basis target);

// Product via the quasi-shuffle of monomial indices; result in f's basis.
QSymFn product(const QSymFn& f, const QSymFn& g);

// Quasi-shuffle multiplicities: M_a * M_b = sum_c mult(c) M_c.
std::map<Composition, Int> quasi_shuffle(const Composition& a, const Composition& b);

// Element of QSym (x) QSym in the monomial basis of both factors.
class TensorQSym {
 public:
  using Key = std::pair<Composition, Composition>;
  using Terms = std::map<Key, Int>;

  const Terms& terms() const { return terms_; }
  void add(const Composition& a, const Composition& b, const Int& c);
  // Adds (f (x) g) with both factors expanded in the monomial basis.
  void add_product(const QSymFn& f, const QSymFn& g, const Int& c = 1);
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const TensorQSym&, const TensorQSym&) = default;
  std::string str() const;

 private:
  Terms terms_;
};

TensorQSym coproduct(const QSymFn& f);
Int counit(const QSymFn& f);
// S(L_a) = (-1)^|a| L_{a^c}; result is returned in f's basis. This is the
// rule under which natural and strict P-partition enumerators correspond for
// order-preserving P-partitions; as a map it is hopf_antipode followed by
// reverse_indices.
QSymFn antipode(const QSymFn& f);
// M_a -> M_{reverse(a)}, i.e. x_i -> x_{N+1-i}.
QSymFn reverse_indices(const QSymFn& f);
// The antipode of the Hopf algebra: L_a -> (-1)^|a| L of the reversed
// complement, satisfying m (S (x) id) Delta = unit * counit.
QSymFn hopf_antipode(const QSymFn& f);

// Linear maps on tensors used by the Hopf-axiom checks.
QSymFn multiply(const TensorQSym& t);
TensorQSym apply_left(const TensorQSym& t, QSymFn (*op)(const QSymFn&));

// Elements of a triple tensor product for coassociativity checks.
using Tensor3 = std::map<std::tuple<Composition, Composition, Composition>, Int>;
Tensor3 coassoc_left(const QSymFn& f);   // (Delta (x) id) Delta f
Tensor3 coassoc_right(const QSymFn& f);  // (id (x) Delta) Delta f

}  // namespace matqsym
