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

#include "matqsym/appendix.hpp"

#include "matqsym/errors.hpp"

namespace matqsym {

namespace {

std::vector<std::string> family_keys(PosetBasis basis, int n) {
  std::vector<std::string> keys;
  if (basis == PosetBasis::P) {
    for (const auto& a : compositions_of(n)) keys.push_back(a.str());
  } else {
    for (const auto& s : all_sigmas(n)) keys.push_back(s.bits());
  }
  return keys;
}

Composition parse_composition_key(const std::string& key) {
  const QSymFn f = QSymFn::parse("M" + key);
  return f.terms().begin()->first;
}

}  // namespace

AppendixMatrices appendix_matrices(int n) {
  AppendixMatrices out;
  out.n = n;
  out.compositions = compositions_of(n);
  out.sigmas = all_sigmas(n);
  const std::size_t d = out.sigmas.size();
  out.A.assign(d, std::vector<Int>(d));
  out.L.assign(d, std::vector<Int>(d));
  for (std::size_t j = 0; j < d; ++j) {
    const auto a = enumerator(r_sigma(out.sigmas[j])).dense(n);
    const auto l = enumerator(q_sigma(out.sigmas[j])).dense(n);
    for (std::size_t i = 0; i < d; ++i) {
      out.A[i][j] = a[i];
      out.L[i][j] = l[i];
    }
  }
  std::vector<std::vector<Int>> qcols(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) qcols[j].push_back(out.L[i][j]);
  }
  out.U.assign(d, std::vector<Int>(d));
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Int> target(d);
    for (std::size_t i = 0; i < d; ++i) target[i] = out.A[i][j];
    auto x = solve_in_span(qcols, target);
    if (!x) throw VerificationFailed("Q enumerators are not a basis in degree " + std::to_string(n));
    for (std::size_t i = 0; i < d; ++i) {
      if (denominator((*x)[i]) != 1) throw VerificationFailed("R in Q expansion is not integral");
      out.U[i][j] = Int(BigInt(numerator((*x)[i])));
    }
  }
  return out;
}

std::string matrix_str(const IntMatrix& m) {
  std::string s;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + row[j].str();
    s += "\n";
  }
  return s;
}

QSymFn basis_element(PosetBasis basis, const std::string& key) {
  switch (basis) {
    case PosetBasis::R:
      return enumerator(r_sigma(SigmaString(key)));
    case PosetBasis::Q:
      return enumerator(q_sigma(SigmaString(key)));
    case PosetBasis::P:
      return enumerator(stanley_p_alpha(parse_composition_key(key)));
  }
  throw InvalidInput("unknown basis");
}

std::vector<std::pair<std::string, Rational>> expand_in(PosetBasis basis, const QSymFn& f, int n) {
  const auto keys = family_keys(basis, n);
  std::vector<std::vector<Int>> cols;
  for (const auto& k : keys) cols.push_back(basis_element(basis, k).dense(n));
  const QSymFn fl = change_basis(f, Basis::Fundamental);
  if (!fl.is_zero() && fl.degree() != n) throw InvalidInput("expand_in: function is not of degree " + std::to_string(n));
  auto x = solve_in_span(cols, fl.dense(n));
  if (!x) throw VerificationFailed("poset enumerators do not form a basis in degree " + std::to_string(n));
  std::vector<std::pair<std::string, Rational>> out;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if ((*x)[i] != 0) out.emplace_back(keys[i], (*x)[i]);
  }
  return out;
}

std::string expansion_str(PosetBasis basis, const std::vector<std::pair<std::string, Rational>>& terms) {
  const char* name = basis == PosetBasis::R ? "R" : basis == PosetBasis::Q ? "Q" : "P";
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [key, c0] : terms) {
    Rational c = c0;
    const bool neg = c < 0;
    if (neg) c = -c;
    s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (c != 1) s += c.str() + "*";
    s += std::string("F(") + name + "_" + key + ")";
    first = false;
  }
  return s;
}

}  // namespace matqsym
