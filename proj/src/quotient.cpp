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

#include "matqsym/quotient.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "matqsym/errors.hpp"

namespace matqsym {

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

using Row = std::vector<Int>;

Int abs_int(const Int& x) { return x.sign() < 0 ? -x : x; }

void axpy(Row& r, const Int q, const Row& p) {  // q by value: callers pass r[c]
  if (q.is_zero()) return;
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (!p[j].is_zero()) r[j] -= q * p[j];
  }
}

Int floor_div(const Int& a, const Int& b) {
  BigInt q, r;
  boost::multiprecision::divide_qr(a.to_big(), b.to_big(), q, r);
  if (r != 0 && ((r < 0) != (b.sign() < 0))) q -= 1;
  return Int(q);
}

}  // namespace

int quotient_rank(int n) {
  if (n < 1) throw InvalidInput("quotient_rank needs n >= 1");
  long long acc = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) acc += mobius(n / d) * ((1LL << d) - 1);
  }
  return static_cast<int>(acc / n);
}

bool QuotientVector::is_zero() const {
  for (const auto& c : coords) {
    if (!c.is_zero()) return false;
  }
  return true;
}

QuotientVector& QuotientVector::operator+=(const QuotientVector& o) {
  if (o.coords.size() != coords.size()) throw InvalidInput("quotient vectors of different length");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

QuotientVector operator*(const Int& c, QuotientVector a) {
  for (auto& x : a.coords) x *= c;
  return a;
}

std::string QuotientVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ", ";
    s += coords[i].str();
  }
  return s + ")";
}

QuotientPresentation quotient_presentation(int n) {
  if (n < 1) throw InvalidInput("quotient presentation needs n >= 1");
  const auto comps = compositions_of(n);
  const std::size_t d = comps.size();

  std::vector<Row> rows;
  for (int k = 1; k < n; ++k) {
    for (const auto& b : compositions_of(k)) {
      for (const auto& e : compositions_of(n - k)) {
        const QSymFn prod = product(QSymFn::L(b), QSymFn::L(e));
        rows.push_back(prod.dense(n));
      }
    }
  }

  // Unit-pivot row reduction; columns in lex order.
  std::vector<std::pair<std::size_t, Row>> pivots;
  std::vector<bool> is_pivot(d, false);
  for (std::size_t c = 0; c < d; ++c) {
    std::erase_if(rows, [](const Row& r) {
      return std::all_of(r.begin(), r.end(), [](const Int& x) { return x.is_zero(); });
    });
    BigInt g = 0;
    for (const auto& r : rows) g = boost::multiprecision::gcd(g, abs_int(r[c]).to_big());
    if (g == 0) continue;
    if (g != 1) {
      throw VerificationFailed("no unit pivot in column " + comps[c].str() +
                               " of the degree-" + std::to_string(n) + " product lattice");
    }
    // Euclid on the column until some row carries a unit entry.
    std::size_t best = 0;
    for (;;) {
      best = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][c].is_zero()) continue;
        if (best == rows.size() || abs_int(rows[i][c]) < abs_int(rows[best][c])) best = i;
      }
      if (abs_int(rows[best][c]) == Int(1)) break;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i != best && !rows[i][c].is_zero()) axpy(rows[i], floor_div(rows[i][c], rows[best][c]), rows[best]);
      }
    }
    Row p = std::move(rows[best]);
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
    if (p[c].sign() < 0) {
      for (auto& x : p) x = -x;
    }
    for (auto& r : rows) axpy(r, r[c], p);
    is_pivot[c] = true;
    pivots.emplace_back(c, std::move(p));
  }

  QuotientPresentation pres;
  pres.n = n;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < d; ++c) {
    if (!is_pivot[c]) {
      free_cols.push_back(c);
      pres.free_basis.push_back(comps[c]);
    }
  }
  if (pres.rank() != quotient_rank(n)) {
    throw VerificationFailed("degree " + std::to_string(n) + ": quotient rank " + std::to_string(pres.rank()) +
                             " disagrees with Hilbert-series rank " + std::to_string(quotient_rank(n)));
  }

  // Image of each unit vector: reduce by the pivot rows in order.
  pres.projection.assign(free_cols.size(), Row(d));
  for (std::size_t j = 0; j < d; ++j) {
    Row v(d);
    v[j] = 1;
    for (const auto& [c, p] : pivots) axpy(v, v[c], p);
    for (std::size_t i = 0; i < free_cols.size(); ++i) pres.projection[i][j] = v[free_cols[i]];
  }
  return pres;
}

const QuotientPresentation& cached_quotient_presentation(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<QuotientPresentation>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<QuotientPresentation>(quotient_presentation(n));
  return *slot;
}

QuotientVector project_mod_m2(const QSymFn& f, const QuotientPresentation& pres) {
  const QSymFn fl = change_basis(f, Basis::Fundamental);
  if (!fl.is_zero() && fl.degree() != pres.n) {
    throw InvalidInput("project_mod_m2: function is not homogeneous of degree " + std::to_string(pres.n));
  }
  const auto v = fl.dense(pres.n);
  QuotientVector out{pres.n, std::vector<Int>(pres.projection.size())};
  for (std::size_t i = 0; i < pres.projection.size(); ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!v[j].is_zero()) s += pres.projection[i][j] * v[j];
    }
    out.coords[i] = s;
  }
  return out;
}

}  // namespace matqsym
