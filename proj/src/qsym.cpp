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

#include "matqsym/qsym.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

#include "matqsym/errors.hpp"

namespace matqsym {

char basis_letter(Basis b) { return b == Basis::Monomial ? 'M' : 'L'; }

QSymFn::QSymFn(Basis basis, Terms terms) : basis_(basis) {
  for (auto& [k, v] : terms) add(k, v);
}

QSymFn QSymFn::one(Basis basis) {
  QSymFn f(basis);
  f.add(Composition{}, 1);
  return f;
}

QSymFn QSymFn::M(const Composition& a, const Int& c) {
  QSymFn f(Basis::Monomial);
  f.add(a, c);
  return f;
}

QSymFn QSymFn::L(const Composition& a, const Int& c) {
  QSymFn f(Basis::Fundamental);
  f.add(a, c);
  return f;
}

Int QSymFn::coeff(const Composition& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Int(0) : it->second;
}

void QSymFn::add(const Composition& a, const Int& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool QSymFn::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.weight() == terms_.rbegin()->first.weight();
}

std::optional<int> QSymFn::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.begin()->first.weight();
}

std::vector<int> QSymFn::degrees() const {
  std::vector<int> out;
  for (const auto& [k, v] : terms_) {
    if (out.empty() || out.back() != k.weight()) out.push_back(k.weight());
  }
  return out;
}

QSymFn QSymFn::graded_piece(int n) const {
  QSymFn out(basis_);
  for (const auto& [k, v] : terms_) {
    if (k.weight() == n) out.terms_.emplace(k, v);
  }
  return out;
}

std::vector<Int> QSymFn::dense(int n) const {
  std::vector<Int> v(n == 0 ? 1 : (std::size_t{1} << (n - 1)));
  for (const auto& [k, c] : terms_) {
    if (k.weight() != n) throw InvalidInput("dense(): term of weight " + std::to_string(k.weight()) +
                                            " in degree-" + std::to_string(n) + " request");
    v[lex_index(k)] = c;
  }
  return v;
}

QSymFn QSymFn::from_dense(Basis basis, int n, const std::vector<Int>& v) {
  const auto comps = compositions_of(n);
  if (v.size() != comps.size()) throw InvalidInput("from_dense(): wrong vector length");
  QSymFn out(basis);
  for (std::size_t i = 0; i < v.size(); ++i) out.add(comps[i], v[i]);
  return out;
}

QSymFn& QSymFn::operator+=(const QSymFn& o) {
  const QSymFn& rhs = o.basis_ == basis_ ? o : change_basis(o, basis_);
  for (const auto& [k, v] : rhs.terms_) add(k, v);
  return *this;
}

QSymFn& QSymFn::operator-=(const QSymFn& o) {
  const QSymFn& rhs = o.basis_ == basis_ ? o : change_basis(o, basis_);
  for (const auto& [k, v] : rhs.terms_) add(k, -v);
  return *this;
}

QSymFn& QSymFn::operator*=(const Int& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

bool operator==(const QSymFn& a, const QSymFn& b) {
  if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
  return a.terms_ == change_basis(b, a.basis_).terms_;
}

bool render_before(const Composition& a, const Composition& b) {
  return std::make_tuple(a.weight(), a.length(), a) < std::make_tuple(b.weight(), b.length(), b);
}

std::string QSymFn::str() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* x, auto* y) { return render_before(x->first, y->first); });
  std::string out;
  bool first = true;
  for (const auto* t : order) {
    Int c = t->second;
    if (first) {
      if (c.sign() < 0) {
        out += '-';
        c = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    if (c != Int(1)) out += c.str() + "*";
    out += basis_letter(basis_);
    out += t->first.str();
    first = false;
  }
  return out;
}

QSymFn QSymFn::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s == "0") return QSymFn(Basis::Monomial);
  if (s.empty()) throw InvalidInput("empty quasisymmetric function");
  std::optional<Basis> basis;
  std::vector<std::pair<Composition, Int>> parsed;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!parsed.empty()) {
      throw InvalidInput("expected '+' or '-' in: " + s);
    }
    Int coeff = 1;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) {
      coeff = Int::parse(std::string_view(s).substr(i, j - i));
      if (j >= s.size() || s[j] != '*') throw InvalidInput("expected '*' after coefficient in: " + s);
      i = j + 1;
    }
    if (i >= s.size() || (s[i] != 'M' && s[i] != 'L')) throw InvalidInput("expected M[...] or L[...] in: " + s);
    const Basis b = s[i] == 'M' ? Basis::Monomial : Basis::Fundamental;
    if (basis && *basis != b) throw InvalidInput("mixed bases in: " + s);
    basis = b;
    ++i;
    if (i >= s.size() || s[i] != '[') throw InvalidInput("expected '[' in: " + s);
    const std::size_t close = s.find(']', i);
    if (close == std::string::npos) throw InvalidInput("unterminated composition in: " + s);
    std::vector<int> parts;
    std::string body = s.substr(i + 1, close - i - 1);
    if (!body.empty()) {
      std::stringstream ss(body);
      std::string tok;
      while (std::getline(ss, tok, ',')) parts.push_back(static_cast<int>(Int::parse(tok).to_int64()));
    }
    parsed.emplace_back(Composition(std::move(parts)), sign < 0 ? -coeff : coeff);
    i = close + 1;
  }
  QSymFn out(*basis);
  for (auto& [k, c] : parsed) out.add(k, c);
  return out;
}

QSymFn change_basis(const QSymFn& f, Basis target) {
  if (f.basis() == target) return f;
  QSymFn out(target);
  for (const auto& [a, c] : f.terms()) {
    const int n = a.weight();
    if (n == 0) {
      out.add(a, c);
      continue;
    }
    const std::uint32_t base = a.subset_mask();
    const std::uint32_t free = ((1u << (n - 1)) - 1) & ~base;
    const int base_len = static_cast<int>(a.length());
    // Iterate over all refinements: supersets of the partial-sum set.
    for (std::uint32_t extra = free;; extra = (extra - 1) & free) {
      const Composition b = Composition::from_subset(n, base | extra);
      if (target == Basis::Monomial) {
        out.add(b, c);  // L_a = sum over refinements of M_b
      } else {
        const int diff = static_cast<int>(b.length()) - base_len;
        out.add(b, diff % 2 ? -c : c);  // Moebius inversion
      }
      if (extra == 0) break;
    }
  }
  return out;
}

std::map<Composition, Int> quasi_shuffle(const Composition& a, const Composition& b) {
  std::map<Composition, Int> out;
  std::vector<int> cur;
  const auto pa = a.parts();
  const auto pb = b.parts();
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    if (i == pa.size() && j == pb.size()) {
      out[Composition(cur)] += 1;
      return;
    }
    if (i < pa.size()) {
      cur.push_back(pa[i]);
      rec(i + 1, j);
      cur.pop_back();
    }
    if (j < pb.size()) {
      cur.push_back(pb[j]);
      rec(i, j + 1);
      cur.pop_back();
    }
    if (i < pa.size() && j < pb.size()) {
      cur.push_back(pa[i] + pb[j]);
      rec(i + 1, j + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

QSymFn product(const QSymFn& f, const QSymFn& g) {
  const QSymFn fm = change_basis(f, Basis::Monomial);
  const QSymFn gm = change_basis(g, Basis::Monomial);
  QSymFn out(Basis::Monomial);
  for (const auto& [a, ca] : fm.terms()) {
    for (const auto& [b, cb] : gm.terms()) {
      const Int cab = ca * cb;
      for (const auto& [c, mult] : quasi_shuffle(a, b)) out.add(c, cab * mult);
    }
  }
  return change_basis(out, f.basis());
}

void TensorQSym::add(const Composition& a, const Composition& b, const Int& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorQSym::add_product(const QSymFn& f, const QSymFn& g, const Int& c) {
  const QSymFn fm = change_basis(f, Basis::Monomial);
  const QSymFn gm = change_basis(g, Basis::Monomial);
  for (const auto& [a, ca] : fm.terms()) {
    for (const auto& [b, cb] : gm.terms()) add(a, b, c * ca * cb);
  }
}

std::string TensorQSym::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out += " + ";
    out += c.str() + "*M" + k.first.str() + "(x)M" + k.second.str();
    first = false;
  }
  return out;
}

TensorQSym coproduct(const QSymFn& f) {
  const QSymFn fm = change_basis(f, Basis::Monomial);
  TensorQSym out;
  for (const auto& [a, c] : fm.terms()) {
    const auto p = a.parts();
    for (std::size_t i = 0; i <= p.size(); ++i) {
      out.add(Composition(std::vector<int>(p.begin(), p.begin() + i)),
              Composition(std::vector<int>(p.begin() + i, p.end())), c);
    }
  }
  return out;
}

Int counit(const QSymFn& f) { return f.coeff(Composition{}); }

QSymFn antipode(const QSymFn& f) {
  const QSymFn fl = change_basis(f, Basis::Fundamental);
  QSymFn out(Basis::Fundamental);
  for (const auto& [a, c] : fl.terms()) out.add(complement(a), a.weight() % 2 ? -c : c);
  return change_basis(out, f.basis());
}

QSymFn reverse_indices(const QSymFn& f) {
  const QSymFn fm = change_basis(f, Basis::Monomial);
  QSymFn out(Basis::Monomial);
  for (const auto& [a, c] : fm.terms()) out.add(reverse(a), c);
  return change_basis(out, f.basis());
}

QSymFn hopf_antipode(const QSymFn& f) { return reverse_indices(antipode(f)); }

QSymFn multiply(const TensorQSym& t) {
  QSymFn out(Basis::Monomial);
  for (const auto& [k, c] : t.terms()) {
    for (const auto& [comp, mult] : quasi_shuffle(k.first, k.second)) out.add(comp, c * mult);
  }
  return out;
}

TensorQSym apply_left(const TensorQSym& t, QSymFn (*op)(const QSymFn&)) {
  TensorQSym out;
  for (const auto& [k, c] : t.terms()) {
    out.add_product(op(QSymFn::M(k.first)), QSymFn::M(k.second), c);
  }
  return out;
}

Tensor3 coassoc_left(const QSymFn& f) {
  Tensor3 out;
  const TensorQSym d = coproduct(f);
  for (const auto& [k, c] : d.terms()) {
    const TensorQSym d2 = coproduct(QSymFn::M(k.first));
    for (const auto& [k2, c2] : d2.terms()) {
      out[{k2.first, k2.second, k.second}] += c * c2;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Tensor3 coassoc_right(const QSymFn& f) {
  Tensor3 out;
  const TensorQSym d = coproduct(f);
  for (const auto& [k, c] : d.terms()) {
    const TensorQSym d2 = coproduct(QSymFn::M(k.second));
    for (const auto& [k2, c2] : d2.terms()) {
      out[{k.first, k2.first, k2.second}] += c * c2;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace matqsym
