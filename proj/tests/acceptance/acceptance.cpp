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

// Acceptance run: one PASS/FAIL line per criterion.
//
// Every comparison is exact. Each criterion also has a wall-clock budget in
// seconds (kBudget); exceeding it is a failure. Criteria listed in
// kLedgered are known not to hold as stated and still print FAIL, but do not
// change the exit status.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "matqsym/appendix.hpp"
#include "matqsym/decomp.hpp"
#include "matqsym/genperm.hpp"
#include "matqsym/invariant.hpp"
#include "matqsym/matroid.hpp"
#include "oracles.hpp"

using namespace matqsym;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

const std::set<int> kLedgered = {12};

std::vector<Matroid> all_matroids(int n) {
  std::vector<Matroid> out;
  for (int r = 0; r <= n; ++r) {
    for (auto& m : enumerate_matroids(n, r, false)) out.push_back(std::move(m));
  }
  return out;
}

// All matroids up to isomorphism with 1 <= n <= 5, plus connected rank 3 on 6.
std::vector<Matroid> catalog() {
  std::vector<Matroid> out;
  for (int n = 1; n <= 5; ++n) {
    for (auto& m : all_matroids(n)) out.push_back(std::move(m));
  }
  for (auto& m : enumerate_matroids(6, 3, true)) out.push_back(std::move(m));
  return out;
}

bool equals_counts(const QSymFn& f, const std::map<Composition, Int>& want, int n) {
  const QSymFn fm = change_basis(f, Basis::Monomial);
  for (const auto& a : compositions_of(n)) {
    const auto it = want.find(a);
    if (fm.coeff(a) != (it == want.end() ? Int(0) : it->second)) return false;
  }
  return true;
}

std::string count_detail(std::size_t ok, std::size_t total, const std::string& what) {
  return std::to_string(ok) + "/" + std::to_string(total) + " " + what;
}

Outcome golden() {
  const bool ok = F(Matroid::loop()) == QSymFn::M({1}) && F(Matroid::isthmus()) == QSymFn::M({1}) &&
                  F(Matroid::uniform(1, 2)) == QSymFn::M({1, 1}) * Int(2) &&
                  F(Matroid::uniform(1, 3)) == QSymFn::M({1, 2}) * Int(3) + QSymFn::M({1, 1, 1}) * Int(6);
  return {ok, "F(U(1,3)) = " + change_basis(F(Matroid::uniform(1, 3)), Basis::Monomial).str()};
}

Outcome oracle_equivalence() {
  const auto cat = catalog();
  std::size_t ok = 0;
  for (const auto& m : cat) ok += equals_counts(F(m), oracle::matroid_counts(m, m.n(), false), m.n());
  return {ok == cat.size(), count_detail(ok, cat.size(), "matroids match the weight-function count")};
}

Outcome l_coefficients() {
  const auto cat = catalog();
  std::size_t ok = 0;
  std::string first_bad;
  for (const auto& m : cat) {
    const auto rep = check_L_coefficients(m);
    const bool good = rep.nonnegative && rep.sum == rep.expected_sum && rep.all_ones == rep.base_count;
    ok += good;
    if (!good && first_bad.empty()) first_bad = "; first failure " + m.str() + " " + rep.str();
  }
  return {ok == cat.size(), count_detail(ok, cat.size(), "nonnegative, sum n!, c_1..1 = #bases") + first_bad};
}

Outcome hopf() {
  std::vector<Matroid> small;
  for (int n = 1; n <= 5; ++n) {
    for (auto& m : all_matroids(n)) small.push_back(std::move(m));
  }
  std::size_t co = 0;
  for (const auto& m : small) co += check_coalgebra_map(m);
  std::size_t pr = 0, pairs = 0;
  for (const auto& a : small) {
    for (const auto& b : small) {
      if (a.n() + b.n() > 5) continue;
      ++pairs;
      pr += check_product(a, b);
    }
  }
  return {co == small.size() && pr == pairs,
          count_detail(co, small.size(), "coproducts") + ", " + count_detail(pr, pairs, "products")};
}

Outcome duality() {
  std::size_t ok = 0, total = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& m : all_matroids(n)) {
      // reverse-indexed coefficients, compared directly
      const QSymFn f = change_basis(F(m), Basis::Monomial);
      const QSymFn fd = change_basis(F(dual(m)), Basis::Monomial);
      bool good = f.terms().size() == fd.terms().size();
      for (const auto& [a, c] : f.terms()) good = good && fd.coeff(reverse(a)) == c;
      ok += good;
      ++total;
    }
  }
  return {ok == total, count_detail(ok, total, "matroids with n <= 6")};
}

Outcome reciprocity() {
  std::size_t ok = 0, total = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& m : all_matroids(n)) {
      ++total;
      QSymFn s = antipode(F(m));
      if (n % 2) s = -s;
      const bool star = equals_counts(s, oracle::matroid_counts(m, n, true), n);
      // phi(M, -m) = (-1)^n phi*(M, m), compared as polynomials via values
      const auto p = phi(m);
      const auto ps = phi_star(m);
      bool poly = true;
      for (int x = 0; x <= n + 1; ++x) {
        Int lhs = p(Int(-x));
        if (n % 2) lhs = -lhs;
        poly = poly && lhs == ps(Int(x));
      }
      ok += star && poly && p.reflected() * Int(n % 2 ? -1 : 1) == ps;
    }
  }
  return {ok == total, count_detail(ok, total, "matroids with n <= 5")};
}

Outcome appendix() {
  const auto a3 = appendix_matrices(3);
  const IntMatrix A3 = {{1, 0, 0, 0}, {2, 1, 1, 0}, {2, 0, 1, 1}, {1, 1, 1, 1}};
  const IntMatrix L3 = {{1, 0, 0, 0}, {2, 1, 0, 0}, {2, 0, 1, 0}, {1, 1, 0, 1}};
  const IntMatrix U3 = {{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}};
  const bool displayed = a3.A == A3 && a3.L == L3 && a3.U == U3;
  bool lu = true;
  for (int n = 1; n <= 6; ++n) {
    const auto am = appendix_matrices(n);
    lu = lu && am.factorizes() && am.triangular();
  }
  std::size_t diag = 0, total = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& s : all_sigmas(n)) {
      ++total;
      const auto ex = freedom_expansion(s);
      diag += ex.triangular && ex.diagonal == Rational(ex.expected_diagonal.to_big());
    }
  }
  return {displayed && lu && diag == total, std::string("A_3, L_3, U_3 ") + (displayed ? "match" : "differ") +
                                                "; LU n<=6 " + (lu ? "ok" : "bad") + "; " +
                                                count_detail(diag, total, "diagonals")};
}

Outcome structure_constants() {
  auto R = [](const char* s) { return basis_element(PosetBasis::R, s); };
  auto Q = [](const char* s) { return basis_element(PosetBasis::Q, s); };
  const QSymFn r01 = R("01");
  const bool r_ok = product(r01, r01) == R("0101") * Int(2) - R("0011");
  const QSymFn q010 = Q("010");
  const bool q_ok = product(q010, q010) == Q("001000") - Q("001001") + Q("001100") + Q("010010") * Int(2) +
                                              Q("010100") * Int(2);
  // P: three terms with coefficients +1, +1, -1, as displayed
  const auto ex = expand_in(PosetBasis::P, product(basis_element(PosetBasis::P, "[1,1]"), QSymFn::L({1})), 3);
  std::vector<Rational> coeffs;
  for (const auto& t : ex) coeffs.push_back(t.second);
  std::sort(coeffs.begin(), coeffs.end());
  const bool p_ok = coeffs == std::vector<Rational>{-1, 1, 1};
  return {r_ok && q_ok && p_ok, "R: " + std::string(r_ok ? "ok" : "bad") + ", Q: " + (q_ok ? "ok" : "bad") +
                                    ", P: " + expansion_str(PosetBasis::P, ex)};
}

Outcome principal() {
  const Matroid ii = direct_sum(Matroid::isthmus(), Matroid::isthmus());
  const Matroid il = direct_sum(Matroid::isthmus(), Matroid::loop());
  const QSymFn a = F(principal_extension(ii));
  const QSymFn b = F(principal_extension(il));
  const bool ok = a == QSymFn::L({2, 1}) * Int(3) + QSymFn::L({1, 1, 1}) * Int(3) &&
                  b == QSymFn::L({2, 1}) * Int(2) + QSymFn::L({1, 2}) * Int(2) + QSymFn::L({1, 1, 1}) * Int(2);
  return {ok, a.str() + "; " + b.str()};
}

Outcome u24_split() {
  const Matroid u = Matroid::uniform(2, 4);
  const auto splits = find_hyperplane_splits(u);
  for (const auto& s : splits) {
    if (s.s != mask_of({1, 2})) continue;
    const auto v = check_valuation(s.cert);
    const bool add = barF(u) == barF(s.cert.pieces[0]) + barF(s.cert.pieces[1]);
    return {v.status == CertificateStatus::Verified && add,
            std::to_string(splits.size()) + " splits; S={1,2} k=" + std::to_string(s.k) + ": " + v.detail +
                "; barF " + barF(u).str()};
  }
  return {false, "S={1,2} split not found"};
}

Outcome rank2_hilbert() {
  std::string detail;
  bool ok = true;
  for (int n = 4; n <= 7; ++n) {
    // loopless rank 2 with at least three parallel classes
    std::vector<Matroid> ms;
    for (auto& m : enumerate_matroids(n, 2, false)) {
      if (loops(m) == 0 && lambda_partition(m).size() >= 3) ms.push_back(std::move(m));
    }
    const auto hb = hilbert_basis(semigroup_of(ms));
    std::vector<std::size_t> want;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (lambda_partition(ms[i]).size() == 3) want.push_back(i);
    }
    ok = ok && hb == want;
    detail += (detail.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " +
              std::to_string(hb.size()) + "/" + std::to_string(ms.size());
  }
  return {ok, detail};
}

Outcome rank3() {
  const auto ms = enumerate_matroids(6, 3, true);
  const auto gens = semigroup_of(ms);
  const auto hb = hilbert_basis(gens);
  std::vector<std::vector<int>> bl;
  for (int a = 1; a <= 6; ++a) {
    for (int b = a + 1; b <= 6; ++b) {
      for (int c = b + 1; c <= 6; ++c) {
        const std::vector<int> t{a, b, c};
        if (t != std::vector<int>{1, 2, 3} && t != std::vector<int>{1, 4, 5} && t != std::vector<int>{3, 5, 6}) {
          bl.push_back(t);
        }
      }
    }
  }
  const Matroid m = Matroid::from_base_lists(6, bl);
  const auto target = barF(m);
  // the indecomposable d with barF(M) = 3 barF(d)
  std::optional<std::size_t> d;
  for (auto i : hb) {
    if (Int(3) * gens.vectors[i] == target) d = i;
  }
  std::ostringstream out;
  out << ms.size() << " connected, " << hb.size() << " indecomposable";
  if (!d) return {false, out.str() + "; barF(M) is not 3 times an indecomposable"};
  out << "; barF(M) = 3 barF(" << gens.labels[*d].substr(0, gens.labels[*d].find(' ')) << ")";

  // a subdivision into three copies of that matroid
  std::vector<Matroid> copies;
  for (const auto& w : weak_images(m, true)) {
    if (is_isomorphic(w, ms[*d])) copies.push_back(w);
  }
  const auto splits = find_hyperplane_splits(m);
  bool subdivision = false;
  bool refines_split = false;
  for (std::size_t i = 0; i < copies.size(); ++i) {
    for (std::size_t j = i + 1; j < copies.size(); ++j) {
      for (std::size_t k = j + 1; k < copies.size(); ++k) {
        const DecompositionCertificate c{m, {copies[i], copies[j], copies[k]}};
        if (check_valuation(c).status != CertificateStatus::Verified) continue;
        subdivision = true;
        for (const auto& s : splits) {
          bool all_one_side = true;
          for (const auto& p : c.pieces) {
            bool lo = false, hi = false;
            for (Mask b : p.bases()) {
              lo = lo || std::popcount(b & s.s) < s.k;
              hi = hi || std::popcount(b & s.s) > s.k;
            }
            all_one_side = all_one_side && !(lo && hi);
          }
          refines_split = refines_split || all_one_side;
        }
      }
    }
  }
  out << "; 3-piece subdivision " << (subdivision ? "found" : "missing") << ", refines a hyperplane split: "
      << (refines_split ? "yes" : "no") << "; hyperplane splits of Q(M): " << splits.size();
  for (const auto& s : splits) out << " (S=" << mask_str(s.s) << ", k=" << s.k << ")";
  const bool indecomposable_subdivision = ms.size() == 15 && hb.size() == 5 && subdivision && !refines_split;
  // Also required: Q(M) has no hyperplane split at all.
  return {indecomposable_subdivision && splits.empty(), out.str()};
}

Outcome tutte_comparison() {
  std::ostringstream out;
  bool ok6 = false;
  {
    const auto ms = enumerate_matroids(6, 3, false);
    std::vector<std::map<std::pair<int, int>, Int>> t;
    std::vector<QSymFn> f;
    for (const auto& m : ms) {
      t.push_back(oracle::tutte_corank_nullity(m));
      f.push_back(F(m));
    }
    for (std::size_t i = 0; i < ms.size() && !ok6; ++i) {
      for (std::size_t j = i + 1; j < ms.size() && !ok6; ++j) {
        if (t[i] == t[j] && f[i] == f[j] && !is_isomorphic(ms[i], ms[j])) {
          ok6 = true;
          out << "n=6 pair #" << i << "/#" << j << " (" << ms[i].base_count() << " bases)";
        }
      }
    }
  }
  bool ok7 = false;
  {
    const auto ms = enumerate_matroids(7, 3, false);
    std::vector<std::map<std::pair<int, int>, Int>> t;
    std::vector<QSymFn> f;
    for (const auto& m : ms) {
      t.push_back(oracle::tutte_corank_nullity(m));
      f.push_back(F(m));
    }
    for (std::size_t i = 0; i < ms.size() && !ok7; ++i) {
      for (std::size_t j = i + 1; j < ms.size() && !ok7; ++j) {
        if (t[i] != t[j] || f[i] == f[j]) continue;
        const Int a = f[i].coeff(Composition{1, 3, 3});
        const Int b = f[j].coeff(Composition{1, 3, 3});
        if (std::min(a, b) == 16 && std::max(a, b) == 18) {
          ok7 = true;
          out << "; n=7 pair #" << i << "/#" << j << " with L[1,3,3] = " << a << ", " << b;
        }
      }
    }
    out << "; " << ms.size() << " rank-3 matroids on 7";
  }
  return {ok6 && ok7, out.str()};
}

Outcome chromatic() {
  std::size_t ok = 0, total = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : all_graphs(n)) {
      ++total;
      const QSymFn f = graphic_zonotope_F(g);
      const auto p = specialize_ones(f);
      const auto chi = chromatic_polynomial(g);
      bool good = true;
      for (int m = 1; m <= 7; ++m) good = good && p(Int(m)) == evaluate_power(chi, Int(m));
      // monomial coefficients against proper colorings, counted here
      std::map<Composition, Int> colorings;
      oracle::for_each_function(n, n, [&](const std::vector<int>& c) {
        for (auto [a, b] : g.edges) {
          if (c[a - 1] == c[b - 1]) return;
        }
        const auto pat = oracle::initial_pattern(c, n);
        if (!pat.empty()) colorings[Composition(pat)] += 1;
      });
      good = good && equals_counts(f, colorings, n);
      ok += good;
    }
  }
  return {ok == total, count_detail(ok, total, "graphs on at most 5 vertices")};
}

Outcome index_two() {
  // L-coordinates (L[1,1], L[2]) of F for the four matroids on two elements
  const std::vector<Matroid> ms = {Matroid::uniform(0, 2), Matroid::uniform(1, 2), Matroid::uniform(2, 2),
                                   direct_sum(Matroid::isthmus(), Matroid::loop())};
  std::vector<std::array<Int, 2>> vs;
  std::string detail;
  bool shapes = true;
  for (const auto& m : ms) {
    const QSymFn f = F(m);
    const std::array<Int, 2> v = {f.coeff({1, 1}), f.coeff({2})};
    vs.push_back(v);
    shapes = shapes && ((v[0] == 1 && v[1] == 1) || (v[0] == 2 && v[1] == 0));
    detail += (detail.empty() ? "" : ", ") + f.str();
  }
  // index of the sublattice of Z^2: gcd of the 2x2 minors
  BigInt g = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const Int det = vs[i][0] * vs[j][1] - vs[i][1] * vs[j][0];
      g = boost::multiprecision::gcd(g, boost::multiprecision::abs(det.to_big()));
    }
  }
  return {shapes && g == 2, detail + "; index " + g.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden values", 1, golden},
      {2, "expansion equals the brute-force count on the catalog", 600, oracle_equivalence},
      {3, "L-coefficients nonnegative, sum n!, c_1..1 = #bases", 600, l_coefficients},
      {4, "coproduct and product compatibility, n <= 5", 600, hopf},
      {5, "duality reverses indices, n <= 6", 600, duality},
      {6, "antipode against brute-force F*, phi reciprocity, n <= 5", 600, reciprocity},
      {7, "appendix matrices and triangular freedom expansions", 600, appendix},
      {8, "negative structure constants", 60, structure_constants},
      {9, "principal-extension values", 10, principal},
      {10, "U(2,4) hyperplane split", 10, u24_split},
      {11, "rank-2 Hilbert basis, n = 4..7", 1800, rank2_hilbert},
      {12, "rank-3, n = 6 indecomposables and the explicit matroid", 3600, rank3},
      {13, "Tutte-equal pairs, n = 6 and 7", 14400, tutte_comparison},
      {14, "graphic zonotopes and chromatic polynomials", 600, chromatic},
      {15, "degree-2 image has index 2", 10, index_two},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.pass && secs <= c.budget_s;
    if (!pass && !kLedgered.count(c.id)) ++unexpected;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%gs", secs, c.budget_s);
    std::cout << (pass ? "PASS " : "FAIL ") << (c.id < 10 ? " " : "") << c.id << "  " << c.title << "  [" << timing
              << "]  " << o.detail << (pass || !kLedgered.count(c.id) ? "" : "  (known, see decisions ledger)")
              << std::endl;
  }
  return unexpected ? 1 : 0;
}
