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

#include <doctest.h>

#include <algorithm>

#include "matqsym/decomp.hpp"
#include "matqsym/errors.hpp"
#include "matqsym/matroid.hpp"

using namespace matqsym;

namespace {

QuotientVector qv(std::vector<Int> c) { return QuotientVector{static_cast<int>(c.size()), std::move(c)}; }

// Sum of generator vectors named by `idx`.
QuotientVector total(const SemigroupInstance& g, const std::vector<std::size_t>& idx) {
  QuotientVector s{g.n, std::vector<Int>(g.vectors.front().coords.size(), Int(0))};
  for (auto i : idx) s += g.vectors[i];
  return s;
}

}  // namespace

TEST_CASE("U(2,4) splits along the three coordinate pairs") {
  const Matroid u = Matroid::uniform(2, 4);
  const auto splits = find_hyperplane_splits(u);
  REQUIRE(splits.size() == 3);
  CHECK(splits[0].s == mask_of({1, 2}));
  for (const auto& s : splits) {
    CHECK(s.k == 1);
    CHECK(check_valuation(s.cert).status == CertificateStatus::Verified);
    CHECK(barF(u) == barF(s.cert.pieces[0]) + barF(s.cert.pieces[1]));
  }
  CHECK(find_hyperplane_splits(Matroid::uniform(1, 3)).empty());
}

TEST_CASE("certificate checks reject bad pieces") {
  const Matroid u = Matroid::uniform(2, 4);
  const Matroid a = Matroid::from_base_lists(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  const Matroid b = Matroid::from_base_lists(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(check_valuation({u, {a, b}}).status == CertificateStatus::Verified);
  // missing the base {3,4} from the cover
  const Matroid c = Matroid::from_base_lists(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(check_valuation({u, {c, b}}).status == CertificateStatus::Invalid);
  // overlapping full-dimensional pieces
  CHECK(check_valuation({u, {u, a}}).status == CertificateStatus::Invalid);
  // wrong rank
  CHECK(check_valuation({u, {Matroid::uniform(1, 4), b}}).status == CertificateStatus::Invalid);
  // round trip
  const DecompositionCertificate cert{u, {a, b}};
  const auto back = parse_certificate_json(cert.str());
  CHECK(back.parent == u);
  CHECK(back.pieces == cert.pieces);
}

TEST_CASE("polytope dimension") {
  CHECK(polytope_dimension(Matroid::uniform(2, 4)) == 3);
  CHECK(polytope_dimension(direct_sum(Matroid::uniform(1, 2), Matroid::uniform(1, 2))) == 2);
  CHECK(polytope_dimension(Matroid::uniform(3, 3)) == 0);
}

TEST_CASE("barF vanishes on disconnected matroids") {
  for (int n = 2; n <= 6; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (const auto& m : enumerate_matroids(n, r, false)) {
        if (!is_connected(m)) CHECK(barF(m).is_zero());
      }
    }
  }
}

TEST_CASE("decomposable search on a hand-made semigroup") {
  SemigroupInstance g;
  g.n = 2;
  g.add("a", qv({1, 0}));
  g.add("b", qv({0, 1}));
  g.add("c", qv({1, 1}));
  g.add("d", qv({2, 1}));
  g.add("zero", qv({0, 0}));
  g.add("a again", qv({1, 0}));
  const auto hb = hilbert_basis(g);
  CHECK(hb == std::vector<std::size_t>{0, 1});

  const auto r = decomposable_search(qv({3, 2}), g);
  REQUIRE(r.status == SearchStatus::Found);
  CHECK(total(g, r.witness) == qv({3, 2}));
  CHECK(r.positive_functional);
  CHECK(decomposable_search(qv({1, 0}), g).status == SearchStatus::NotFound);
  CHECK(decomposable_search(qv({-1, 0}), g).status == SearchStatus::NotFound);

  SearchBudget tiny;
  tiny.max_nodes = 2;
  CHECK(decomposable_search(qv({40, 30}), g, tiny).status == SearchStatus::BudgetExhausted);
}

TEST_CASE("rank two Hilbert basis is the three-class matroids") {
  for (int n = 4; n <= 6; ++n) {
    const auto ms = enumerate_matroids(n, 2, true);
    const auto g = semigroup_of(ms);
    std::vector<std::size_t> want;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (lambda_partition(ms[i]).size() == 3) want.push_back(i);
    }
    CHECK(hilbert_basis(g) == want);
  }
}

TEST_CASE("weak image generators exclude the matroid itself") {
  const Matroid u = Matroid::uniform(2, 4);
  const auto g = weak_image_generators(u);
  CHECK(g.vectors.size() == 6);
  for (const auto& v : g.vectors) CHECK(v != barF(u));
}
