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
#include <numeric>
#include <random>

#include "matqsym/errors.hpp"
#include "matqsym/matroid.hpp"
#include "oracles.hpp"

using namespace matqsym;

namespace {

std::vector<Matroid> all_up_to(int max_n) {
  std::vector<Matroid> out;
  for (int n = 1; n <= max_n; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (auto& m : enumerate_matroids(n, r, false)) out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<int> random_perm(std::mt19937& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("base family validation") {
  CHECK(Matroid::from_base_lists(2, {{1}, {2}}).rank() == 1);
  CHECK_THROWS_AS(Matroid::from_base_lists(3, {{1, 2}, {3}}), InvalidInput);
  CHECK_THROWS_AS(Matroid::from_base_lists(4, {{1, 2}, {3, 4}}), InvalidInput);
  CHECK_THROWS_AS(Matroid::from_base_lists(2, {{1, 3}}), InvalidInput);
  CHECK_THROWS_AS(Matroid::from_base_lists(2, {}), InvalidInput);
  const auto fail = exchange_violation(4, {mask_of({1, 2}), mask_of({3, 4})});
  REQUIRE(fail);
  CHECK(fail->e >= 1);
  CHECK(parse_matroid_json(R"({"n": 2, "bases": [[1], [2]]})") == Matroid::uniform(1, 2));
  CHECK(Matroid::uniform(1, 2).str() == R"({"n": 2, "bases": [[1], [2]]})");
  CHECK_THROWS_AS(parse_matroid_json("{\"n\": 2}"), InvalidInput);
}

TEST_CASE("uniform matroids, rank function and greedy") {
  const Matroid u = Matroid::uniform(2, 4);
  CHECK(u.base_count() == 6);
  CHECK(u.rank_of(mask_of({1, 2, 3})) == 2);
  CHECK(u.is_independent(mask_of({4})));
  CHECK(is_connected(u));
  CHECK(loops(Matroid::uniform(0, 2)) == 3);
  CHECK(coloops(Matroid::uniform(3, 3)) == 7);
  CHECK(splits_completely(Matroid::uniform(0, 2)));
  CHECK_FALSE(splits_completely(u));

  const WeightFunction f{{3, 1, 2, 2}};
  CHECK(greedy_base(u, f) == mask_of({2, 3}));
  const auto mw = min_weight_bases(u, f);
  CHECK(mw.weight == 3);
  CHECK(mw.bases.size() == 2);
  CHECK_FALSE(is_generic(u, f));
  CHECK(is_generic(u, WeightFunction{{1, 2, 3, 4}}));
}

TEST_CASE("duality, minors and sums") {
  std::mt19937 rng(1);
  for (const auto& m : all_up_to(5)) {
    CHECK(dual(dual(m)) == m);
    CHECK(dual(m).rank() == m.n() - m.rank());
    const Mask a = static_cast<Mask>(rng()) & m.ground();
    // (M / A)* = M* \ A
    CHECK(dual(contract(m, a).matroid) == delete_set(dual(m), a).matroid);
    CHECK(restrict_to(m, a).matroid.rank() == m.rank_of(a));
    CHECK(contract(m, a).matroid.rank() == m.rank() - m.rank_of(a));
    const int comps = static_cast<int>(min_separators(m).size());
    CHECK(static_cast<int>(min_separators(direct_sum(m, Matroid::isthmus())).size()) == comps + 1);
  }
  const Matroid s = direct_sum(Matroid::isthmus(), Matroid::loop());
  CHECK(s.bases() == std::vector<Mask>{1});
}

TEST_CASE("isomorphism and canonical form") {
  std::mt19937 rng(2);
  for (const auto& m : all_up_to(6)) {
    const auto p = random_perm(rng, m.n());
    const Matroid r = relabel(m, p);
    CHECK(canonical_form(r) == canonical_form(m));
    std::vector<int> w;
    REQUIRE(is_isomorphic(m, r, &w));
    CHECK(relabel(m, w) == r);
  }
  CHECK_FALSE(is_isomorphic(Matroid::uniform(2, 4), Matroid::from_base_lists(4, {{1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}})));
}

TEST_CASE("enumeration counts") {
  // non-isomorphic matroids on n elements
  const std::size_t total[] = {1, 2, 4, 8, 17, 38, 98, 306};
  for (int n = 0; n <= 7; ++n) {
    std::size_t sum = 0;
    for (int r = 0; r <= n; ++r) sum += enumerate_matroids(n, r, false).size();
    CHECK(sum == total[n]);
  }
  CHECK(enumerate_matroids(6, 3, true).size() == 15);
  CHECK(enumerate_matroids(6, 3, false).size() == 38);
  CHECK(enumerate_matroids(7, 3, false).size() == 108);
  // the extension-based enumerator agrees with the exhaustive one
  for (int n = 1; n <= 5; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (bool conn : {false, true}) {
        const auto a = enumerate_matroids(n, r, conn);
        const auto b = enumerate_matroids_exhaustive(n, r, conn);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(canonical_form(a[i]) == canonical_form(b[i]));
      }
    }
  }
}

TEST_CASE("weak images") {
  const Matroid u = Matroid::uniform(2, 4);
  for (const auto& w : weak_images(u, false)) {
    CHECK(w.rank() == 2);
    CHECK(std::includes(u.bases().begin(), u.bases().end(), w.bases().begin(), w.bases().end()));
  }
  // connected rank-2 weak images of U(2,4): U(2,4) itself and the 5-base matroid,
  // in all their labellings: 1 + 6
  CHECK(weak_images(u, true).size() == 7);
}

TEST_CASE("Tutte polynomial by corank-nullity") {
  for (const auto& m : all_up_to(6)) {
    CHECK(tutte(m).terms() == oracle::tutte_corank_nullity(m));
    CHECK(tutte(dual(m)) == tutte(m).swapped());
  }
  CHECK(tutte(Matroid::uniform(1, 2)).str() == "x + y");
  CHECK(tutte(Matroid::uniform(2, 4)).str() == "x^2 + y^2 + 2*x + 2*y");
}

TEST_CASE("freedom matroids and principal extension") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& s : all_sigmas(n)) CHECK(freedom_matroid(s) == freedom_bases_direct(s));
  }
  CHECK(freedom_matroid(SigmaString("01111")) == Matroid::uniform(1, 5));
  CHECK(principal_extension(Matroid::uniform(2, 3)) == Matroid::uniform(2, 4));
  CHECK(principal_extension(Matroid()) == Matroid::loop());
  CHECK(add_isthmus(Matroid::loop()) == direct_sum(Matroid::loop(), Matroid::isthmus()));
}

TEST_CASE("rank two parallel classes") {
  const Matroid m = Matroid::from_base_lists(4, {{1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(lambda_partition(m) == std::vector<int>{2, 1, 1});
  CHECK(is_isomorphic(rank2_from_lambda({2, 1, 1}), m));
}

TEST_CASE("intersections") {
  const Matroid u = Matroid::uniform(2, 4);
  const Matroid a = Matroid::from_base_lists(4, {{1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}});
  const auto in = intersect(u, a);
  REQUIRE(in.matroid);
  CHECK(*in.matroid == a);
  const Matroid b = Matroid::from_base_lists(4, {{1, 2}, {1, 3}, {1, 4}});
  const Matroid c = Matroid::from_base_lists(4, {{2, 3}, {2, 4}, {3, 4}, {1, 3}, {1, 4}});
  const auto bc = intersect(b, c);
  CHECK(bc.bases == std::vector<Mask>{mask_of({1, 3}), mask_of({1, 4})});
}
