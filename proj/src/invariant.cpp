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

#include "matqsym/invariant.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numeric>

#include <omp.h>

#include "matqsym/errors.hpp"
#include "matqsym/linalg.hpp"

namespace matqsym {

namespace {

void add_counts(std::vector<std::uint64_t>& acc, const std::vector<std::uint64_t>& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
}

QSymFn from_descent_counts(int n, const std::vector<std::uint64_t>& counts) {
  if (n == 0) return QSymFn::L({}, Int(static_cast<std::int64_t>(counts[0])));
  QSymFn out(Basis::Fundamental);
  for (std::uint32_t s = 0; s < counts.size(); ++s) {
    if (counts[s]) out.add(Composition::from_subset(n, s), Int(static_cast<std::int64_t>(counts[s])));
  }
  return out;
}

enum class Weighting { Generic, Minimizers };

// Shared kernel of the two brute-force oracles.
std::map<Composition, Int> bruteforce(const Matroid& m, int k, Weighting w, Exec exec,
                                      const BruteForceBudget& budget) {
  if (k < 1) throw InvalidInput("brute force needs k >= 1");
  const int n = m.n();
  if (std::pow(static_cast<double>(k), n) > budget.max_functions) {
    throw BudgetExceeded("k^n = " + std::to_string(k) + "^" + std::to_string(n) + " exceeds the brute-force budget");
  }
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total *= k;
  std::vector<std::vector<int>> base_elems;
  for (Mask b : m.bases()) {
    std::vector<int> el;
    for (Mask s = b; s; s &= s - 1) el.push_back(std::countr_zero(s));
    base_elems.push_back(std::move(el));
  }

  using Tally = std::map<std::vector<int>, std::int64_t>;
  auto visit = [&](std::int64_t idx, std::vector<int>& f, std::vector<int>& mult, Tally& tally) {
    std::fill(mult.begin(), mult.end(), 0);
    for (int e = 0; e < n; ++e) {
      f[e] = static_cast<int>(idx % k);
      idx /= k;
      ++mult[f[e]];
    }
    // Only value sets {1..l} contribute to the M-coefficient at (mult_1..mult_l).
    int used = 0;
    while (used < k && mult[used] > 0) ++used;
    for (int v = used; v < k; ++v) {
      if (mult[v]) return;
    }
    int best = 0;
    std::int64_t hits = 0;
    for (const auto& el : base_elems) {
      int s = 0;
      for (int e : el) s += f[e];
      if (hits == 0 || s < best) {
        best = s;
        hits = 1;
      } else if (s == best) {
        ++hits;
      }
    }
    const std::int64_t add = w == Weighting::Generic ? (hits == 1 ? 1 : 0) : hits;
    if (add) tally[std::vector<int>(mult.begin(), mult.begin() + used)] += add;
  };

  Tally merged;
  if (exec == Exec::Serial) {
    std::vector<int> f(n), mult(k);
    for (std::int64_t idx = 0; idx < total; ++idx) visit(idx, f, mult, merged);
  } else {
#pragma omp parallel
    {
      Tally local;
      std::vector<int> f(n), mult(k);
#pragma omp for schedule(static)
      for (std::int64_t idx = 0; idx < total; ++idx) visit(idx, f, mult, local);
#pragma omp critical
      for (const auto& [key, c] : local) merged[key] += c;
    }
  }
  std::map<Composition, Int> out;
  for (const auto& [key, c] : merged) out[Composition(key)] = Int(c);
  return out;
}

// Number of distinct bases of (M|F)/G for G subset of F.
bool subquotient_splits(const Matroid& m, Mask f, Mask g) {
  const int rf = m.rank_of(f);
  const int rg = m.rank_of(g);
  bool found = false;
  Mask seen = 0;
  for (Mask b : m.bases()) {
    if (std::popcount(b & f) != rf || std::popcount(b & g) != rg) continue;
    const Mask piece = b & f & ~g;
    if (!found) {
      seen = piece;
      found = true;
    } else if (piece != seen) {
      return false;
    }
  }
  return found;
}

}  // namespace

LabelledPoset strict_base_poset(const Matroid& m, Mask b, BaseLabelling labelling) {
  const LabelledPoset p = base_poset(m, b);
  if (labelling == BaseLabelling::ReverseExtension) return strict_labelling(p);
  std::map<int, int> relabel;
  int next = 1;
  for (int e : mask_elements(m.ground() & ~b)) relabel[e] = next++;
  for (int e : mask_elements(b)) relabel[e] = next++;
  return p.relabelled(relabel);
}

QSymFn F(const Matroid& m, const InvariantOptions& opt) {
  const int n = m.n();
  if (n > opt.limits.max_poset_size) {
    throw BudgetExceeded("F(M) limited to " + std::to_string(opt.limits.max_poset_size) + " elements");
  }
  const auto& bases = m.bases();
  std::vector<std::uint64_t> total(std::size_t{1} << std::max(n - 1, 0), 0);
  if (opt.exec == Exec::Serial) {
    for (Mask b : bases) add_counts(total, descent_counts(strict_base_poset(m, b, opt.labelling), opt.limits));
  } else {
    std::exception_ptr err;
#pragma omp parallel
    {
      std::vector<std::uint64_t> local(total.size(), 0);
#pragma omp for schedule(dynamic)
      for (std::size_t i = 0; i < bases.size(); ++i) {
        try {
          add_counts(local, descent_counts(strict_base_poset(m, bases[i], opt.labelling), opt.limits));
        } catch (...) {
#pragma omp critical
          err = std::current_exception();
        }
      }
#pragma omp critical
      add_counts(total, local);
    }
    if (err) std::rethrow_exception(err);
  }
  return from_descent_counts(n, total);
}

std::map<Composition, Int> F_bruteforce(const Matroid& m, int k, Exec exec, const BruteForceBudget& budget) {
  return bruteforce(m, k, Weighting::Generic, exec, budget);
}

std::map<Composition, Int> F_star_bruteforce(const Matroid& m, int k, Exec exec, const BruteForceBudget& budget) {
  return bruteforce(m, k, Weighting::Minimizers, exec, budget);
}

Int flag_coefficient(const Matroid& m, const Composition& a) {
  if (a.weight() != m.n()) throw InvalidInput("flag_coefficient: composition weight must equal n");
  std::int64_t count = 0;
  const auto parts = a.parts();
  std::function<void(std::size_t, Mask)> rec = [&](std::size_t i, Mask prev) {
    if (i == parts.size()) {
      ++count;
      return;
    }
    const Mask rest = m.ground() & ~prev;
    // Subsets of `rest` of size parts[i].
    for (Mask s = rest;; s = (s - 1) & rest) {
      if (std::popcount(s) == parts[i] && subquotient_splits(m, prev | s, prev)) rec(i + 1, prev | s);
      if (s == 0) break;
    }
  };
  rec(0, 0);
  return Int(count);
}

QSymFn F_star(const Matroid& m, const InvariantOptions& opt) {
  QSymFn s = antipode(F(m, opt));
  return m.n() % 2 ? -s : s;
}

IntValuedPoly phi(const Matroid& m, const InvariantOptions& opt) { return specialize_ones(F(m, opt)); }

IntValuedPoly phi_star(const Matroid& m, const InvariantOptions& opt) { return specialize_ones(F_star(m, opt)); }

bool check_reciprocity(const Matroid& m, const InvariantOptions& opt) {
  const Int sign = m.n() % 2 ? Int(-1) : Int(1);
  return phi(m, opt).reflected() == phi_star(m, opt) * sign;
}

bool check_coalgebra_map(const Matroid& m, const InvariantOptions& opt) {
  const TensorQSym lhs = coproduct(change_basis(F(m, opt), Basis::Monomial));
  TensorQSym rhs;
  for (Mask a = 0;; ++a) {
    rhs.add_product(F(restrict_to(m, a).matroid, opt), F(contract(m, a).matroid, opt));
    if (a == m.ground()) break;
  }
  return lhs == rhs;
}

bool check_product(const Matroid& a, const Matroid& b, const InvariantOptions& opt) {
  return F(direct_sum(a, b), opt) == product(F(a, opt), F(b, opt));
}

bool check_duality(const Matroid& m, const InvariantOptions& opt) {
  const QSymFn f = change_basis(F(m, opt), Basis::Monomial);
  const QSymFn fd = change_basis(F(dual(m), opt), Basis::Monomial);
  if (f.terms().size() != fd.terms().size()) return false;
  for (const auto& [a, c] : f.terms()) {
    if (fd.coeff(reverse(a)) != c) return false;
  }
  return true;
}

std::string LCoefficientReport::str() const {
  return std::string("nonnegative=") + (nonnegative ? "yes" : "no") + " sum=" + sum.str() + " n!=" +
         expected_sum.str() + " c_1..1=" + all_ones.str() + " bases=" + base_count.str() +
         " first-coefficients=" + (first_coefficients ? "ok" : "mismatch");
}

LCoefficientReport check_L_coefficients(const Matroid& m, const InvariantOptions& opt) {
  const int n = m.n();
  const QSymFn f = F(m, opt);
  LCoefficientReport rep;
  rep.nonnegative = true;
  for (const auto& [a, c] : f.terms()) {
    rep.sum += c;
    if (c.sign() < 0) rep.nonnegative = false;
  }
  rep.expected_sum = factorial(n);
  rep.all_ones = f.coeff(Composition(std::vector<int>(n, 1)));
  rep.base_count = Int(static_cast<std::int64_t>(m.base_count()));

  rep.first_coefficients = true;
  if (splits_completely(m)) {
    rep.first_coefficients = n == 0 || f.coeff(Composition{n}) == Int(1);
    return rep;
  }
  const int r = m.rank();
  const int rstar = n - r;
  const int l = std::popcount(loops(m));
  const int c = std::popcount(coloops(m));
  for (const auto& a : compositions_of(n)) {
    if (a.length() > 2) continue;
    Int expected = 0;
    for (int j = 0; j <= l + c; ++j) {
      if (a == Composition{r + l - j, rstar - l + j}) expected += binomial(Int(l + c), j) * rep.base_count;
    }
    if (f.coeff(a) != expected) rep.first_coefficients = false;
  }
  return rep;
}

FreedomExpansion freedom_expansion(const SigmaString& s, const InvariantOptions& opt) {
  const int n = s.size();
  FreedomExpansion out;
  out.taus = all_sigmas(n);
  std::vector<std::vector<Int>> cols;
  for (const auto& t : out.taus) cols.push_back(enumerator(strict_labelling(r_sigma(t)), opt.limits).dense(n));
  const auto target = F(freedom_matroid(s), opt).dense(n);
  auto x = solve_in_span(cols, target);
  if (!x) throw VerificationFailed("strict R enumerators do not span F(M_sigma)");
  out.coeffs = *x;
  out.integral = std::all_of(out.coeffs.begin(), out.coeffs.end(),
                             [](const Rational& q) { return denominator(q) == 1; });
  out.triangular = true;
  for (std::size_t i = 0; i < out.taus.size(); ++i) {
    if (s < out.taus[i] && out.coeffs[i] != 0) out.triangular = false;
    if (out.taus[i] == s) out.diagonal = out.coeffs[i];
  }
  const auto bz = blocks_and_z(s);
  out.expected_diagonal = 1;
  for (std::size_t i = 0; i < bz.blocks.size(); ++i) {
    out.expected_diagonal *= binomial(Int(static_cast<std::int64_t>(bz.blocks[i].size())), bz.zeros[i]);
  }
  return out;
}

}  // namespace matqsym
