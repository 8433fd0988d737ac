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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matqsym/intpoly.hpp"
#include "matqsym/invariant.hpp"
#include "matqsym/matroid.hpp"
#include "matqsym/poset.hpp"
#include "matqsym/qsym.hpp"

namespace matqsym {

using Point = std::vector<int>;

// A generalized permutohedron given by its vertices and edges. Every edge is
// a positive multiple of some e_j - e_i.
class GenPermGraph {
 public:
  GenPermGraph() = default;
  // Validates edge directions, index ranges and connectivity.
  GenPermGraph(int n, std::vector<Point> vertices, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // {"n": 2, "vertices": [[1,0],[0,1]], "edges": [[0,1]]}, vertex indices from 0.
  std::string str() const;
  static GenPermGraph parse(std::string_view json);

 private:
  int n_ = 0;
  std::vector<Point> vertices_;
  std::vector<std::pair<int, int>> edges_;
};

// Simple graph on [n].
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // a < b, sorted, distinct

  static SimpleGraph make(int n, std::vector<std::pair<int, int>> edges);
  static SimpleGraph parse(std::string_view text);  // "n; 1-2, 2-3"
  std::string str() const;
};

// i < j for each edge {v, v'} with v' - v a positive multiple of e_j - e_i,
// transitively closed.
LabelledPoset vertex_poset(const GenPermGraph& q, std::size_t v);

struct GenPermOptions {
  Exec exec = Exec::Parallel;
  EnumerationLimits limits;
  std::size_t max_vertices = 200000;
};

// Sum over vertices of the strictly labelled vertex-poset enumerators, L basis.
QSymFn F_genperm(const GenPermGraph& q, const GenPermOptions& opt = {});
QSymFn F_star_genperm(const GenPermGraph& q, const GenPermOptions& opt = {});
IntValuedPoly phi_genperm(const GenPermGraph& q, const GenPermOptions& opt = {});
IntValuedPoly phi_star_genperm(const GenPermGraph& q, const GenPermOptions& opt = {});
// phi(Q, -m) = (-1)^n phi*(Q, m).
bool reciprocity_check(const GenPermGraph& q, const GenPermOptions& opt = {});

// Brute force over f: [n] -> [k] minimizing f.v over the vertices; keyed as in
// F_bruteforce. The star version weights f by its number of minimizers.
std::map<Composition, Int> F_genperm_bruteforce(const GenPermGraph& q, int k, const BruteForceBudget& budget = {});
std::map<Composition, Int> F_star_genperm_bruteforce(const GenPermGraph& q, int k,
                                                     const BruteForceBudget& budget = {});

// Base indicator vectors joined by single basis exchanges.
GenPermGraph from_matroid(const Matroid& m);

// Acyclic orientations as bit masks over g.edges: bit t set means edge
// (a, b) is oriented b -> a.
std::vector<std::uint64_t> acyclic_orientations(const SimpleGraph& g, std::size_t max_count = 200000);

// Vertices sum of e_tail over the edges of an acyclic orientation, joined
// when the orientations differ in one edge.
GenPermGraph graphic_zonotope(const SimpleGraph& g);

// Sum over acyclic orientations of the strict enumerator of their transitive
// closure.
QSymFn graphic_zonotope_F(const SimpleGraph& g, const GenPermOptions& opt = {});

// Proper colorings c: [n] -> [k], keyed as in F_bruteforce.
std::map<Composition, Int> proper_coloring_counts(const SimpleGraph& g, int k, const BruteForceBudget& budget = {});

// Power-basis coefficients of the chromatic polynomial, by deletion-contraction.
std::vector<Int> chromatic_polynomial(const SimpleGraph& g);
Int evaluate_power(const std::vector<Int>& coeffs, const Int& m);

// specialize_ones(graphic_zonotope_F(G)) agrees with the chromatic
// polynomial at m = 1..max_m (default n + 2).
bool chromatic_poly_check(const SimpleGraph& g, int max_m = -1, const GenPermOptions& opt = {});

// All simple graphs on [n] up to isomorphism (n <= 6).
std::vector<SimpleGraph> all_graphs(int n);

}  // namespace matqsym
