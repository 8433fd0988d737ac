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

// Small independent oracles shared by the unit tests. Nothing here calls the
// library code it is meant to check.

#include <bit>
#include <map>
#include <random>
#include <vector>

#include "matqsym/matroid.hpp"
#include "matqsym/poset.hpp"
#include "matqsym/qsym.hpp"

namespace oracle {

using matqsym::Composition;
using matqsym::Int;

// L_a(x_1..x_k) summed over weakly increasing index words, strict at the
// descents of a.
inline Int eval_L(const Composition& a, const std::vector<Int>& xs) {
  const int n = a.weight();
  std::vector<bool> strict(n, false);
  int pos = 0;
  for (std::size_t i = 0; i + 1 < a.length(); ++i) {
    pos += a[i];
    strict[pos] = true;
  }
  const int k = static_cast<int>(xs.size());
  std::vector<Int> dp(k, Int(0));
  for (int i = 0; i < k; ++i) dp[i] = xs[i];
  for (int j = 1; j < n; ++j) {
    std::vector<Int> nd(k, Int(0));
    Int run = 0;
    for (int i = 0; i < k; ++i) {
      if (strict[j]) {
        nd[i] = run * xs[i];
        run += dp[i];
      } else {
        run += dp[i];
        nd[i] = run * xs[i];
      }
    }
    dp = std::move(nd);
  }
  Int s = 0;
  for (const auto& v : dp) s += v;
  return n == 0 ? Int(1) : s;
}

// M_a: indices constant within a part and strictly increasing across parts.
inline Int eval_M(const Composition& a, const std::vector<Int>& xs) {
  const int k = static_cast<int>(xs.size());
  if (a.empty()) return 1;
  std::vector<Int> dp(k, Int(0));
  auto pw = [](const Int& x, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
  };
  for (int i = 0; i < k; ++i) dp[i] = pw(xs[i], a[0]);
  for (std::size_t j = 1; j < a.length(); ++j) {
    std::vector<Int> nd(k, Int(0));
    Int run = 0;
    for (int i = 0; i < k; ++i) {
      nd[i] = run * pw(xs[i], a[j]);
      run += dp[i];
    }
    dp = std::move(nd);
  }
  Int s = 0;
  for (const auto& v : dp) s += v;
  return s;
}

inline Int eval(const matqsym::QSymFn& f, const std::vector<Int>& xs) {
  Int s = 0;
  for (const auto& [a, c] : f.terms()) {
    s += c * (f.basis() == matqsym::Basis::Monomial ? eval_M(a, xs) : eval_L(a, xs));
  }
  return s;
}

inline std::vector<Int> random_point(std::mt19937& rng, int k) {
  std::uniform_int_distribution<int> d(-3, 4);
  std::vector<Int> xs;
  for (int i = 0; i < k; ++i) xs.push_back(d(rng));
  return xs;
}

// Multiplicity vector of f in [k]^n, or empty when the used values are not
// an initial segment {1..l}.
inline std::vector<int> initial_pattern(const std::vector<int>& f, int k) {
  std::vector<int> mult(k, 0);
  for (int x : f) ++mult[x - 1];
  int used = 0;
  while (used < k && mult[used]) ++used;
  for (int v = used; v < k; ++v) {
    if (mult[v]) return {};
  }
  return {mult.begin(), mult.begin() + used};
}

template <typename Visit>
void for_each_function(int n, int k, Visit visit) {
  if (k < 1 && n > 0) return;
  std::vector<int> f(n, 1);
  for (;;) {
    visit(f);
    int p = 0;
    while (p < n && f[p] == k) f[p++] = 1;
    if (p == n) return;
    ++f[p];
  }
}

// M-coefficients of F(M) (star = false) or F*(M) (star = true) straight from
// the definition: count weight functions by their minimizing bases.
inline std::map<Composition, Int> matroid_counts(const matqsym::Matroid& m, int k, bool star) {
  std::map<Composition, Int> out;
  for_each_function(m.n(), k, [&](const std::vector<int>& f) {
    auto pat = initial_pattern(f, k);
    if (pat.empty() && m.n() > 0) return;
    long best = -1, hits = 0;
    for (matqsym::Mask b : m.bases()) {
      long w = 0;
      for (int e = 1; e <= m.n(); ++e) {
        if (b >> (e - 1) & 1u) w += f[e - 1];
      }
      if (best < 0 || w < best) {
        best = w;
        hits = 1;
      } else if (w == best) {
        ++hits;
      }
    }
    const long add = star ? hits : (hits == 1 ? 1 : 0);
    if (add) out[Composition(pat)] += Int(add);
  });
  return out;
}

// P-partitions of a labelled poset: order preserving, strict along relations
// whose labels decrease.
inline std::map<Composition, Int> ppartition_counts(const matqsym::LabelledPoset& p, int k) {
  std::map<Composition, Int> out;
  const auto rel = p.relations();
  const auto& labels = p.labels();
  for_each_function(p.size(), k, [&](const std::vector<int>& f) {
    auto val = [&](int label) { return f[p.index_of(label)]; };
    for (auto [a, b] : rel) {
      if (val(a) > val(b)) return;
      if (a > b && val(a) == val(b)) return;
    }
    auto pat = initial_pattern(f, k);
    if (pat.empty() && !labels.empty()) return;
    out[Composition(pat)] += 1;
  });
  return out;
}

// Tutte polynomial by corank-nullity: (i, j) -> coefficient of x^i y^j.
inline std::map<std::pair<int, int>, Int> tutte_corank_nullity(const matqsym::Matroid& m) {
  std::map<std::pair<int, int>, Int> t;
  const int r = m.rank();
  for (matqsym::Mask a = 0; a <= m.ground(); ++a) {
    // rank by maximum intersection with a base
    int ra = 0;
    for (matqsym::Mask b : m.bases()) ra = std::max(ra, std::popcount(a & b));
    const int i = r - ra;
    const int j = std::popcount(a) - ra;
    // (x-1)^i (y-1)^j
    for (int p = 0; p <= i; ++p) {
      for (int q = 0; q <= j; ++q) {
        Int c = matqsym::binomial(Int(i), p) * matqsym::binomial(Int(j), q);
        if ((i - p + j - q) % 2) c = -c;
        t[{p, q}] += c;
      }
    }
    if (a == m.ground()) break;
  }
  for (auto it = t.begin(); it != t.end();) it = it->second.is_zero() ? t.erase(it) : std::next(it);
  return t;
}

}  // namespace oracle
