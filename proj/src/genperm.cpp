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

#include "matqsym/genperm.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "matqsym/errors.hpp"

namespace matqsym {

namespace {

// Direction of v' - v as (i, j, c) with v' - v = c (e_j - e_i), c > 0,
// 0-based coordinates.
bool edge_direction(const Point& v, const Point& w, int& i, int& j) {
  i = j = -1;
  int up = 0;
  int down = 0;
  for (std::size_t t = 0; t < v.size(); ++t) {
    const int d = w[t] - v[t];
    if (d == 0) continue;
    if (d > 0) {
      if (j >= 0) return false;
      j = static_cast<int>(t);
      up = d;
    } else {
      if (i >= 0) return false;
      i = static_cast<int>(t);
      down = -d;
    }
  }
  return i >= 0 && j >= 0 && up == down;
}

void add_counts(std::vector<std::uint64_t>& acc, const std::vector<std::uint64_t>& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
}

QSymFn sum_strict_enumerators(int n, std::size_t count, const std::function<LabelledPoset(std::size_t)>& poset_at,
                              const GenPermOptions& opt) {
  if (n > opt.limits.max_poset_size) {
    throw BudgetExceeded("enumeration limited to " + std::to_string(opt.limits.max_poset_size) + " coordinates");
  }
  std::vector<std::uint64_t> total(std::size_t{1} << std::max(n - 1, 0), 0);
  if (opt.exec == Exec::Serial) {
    for (std::size_t v = 0; v < count; ++v) add_counts(total, descent_counts(strict_labelling(poset_at(v)), opt.limits));
  } else {
    std::exception_ptr err;
#pragma omp parallel
    {
      std::vector<std::uint64_t> local(total.size(), 0);
#pragma omp for schedule(dynamic)
      for (std::size_t v = 0; v < count; ++v) {
        try {
          add_counts(local, descent_counts(strict_labelling(poset_at(v)), opt.limits));
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
  if (n == 0) return QSymFn::L({}, Int(static_cast<std::int64_t>(total[0])));
  QSymFn out(Basis::Fundamental);
  for (std::uint32_t s = 0; s < total.size(); ++s) {
    if (total[s]) out.add(Composition::from_subset(n, s), Int(static_cast<std::int64_t>(total[s])));
  }
  return out;
}

// Keyed brute force over f: [n] -> [k]; `weight` maps the number of
// minimizers to the contribution.
template <typename Score, typename Weight>
std::map<Composition, Int> value_pattern_count(int n, int k, const BruteForceBudget& budget, Score score,
                                               Weight weight) {
  if (k < 1) throw InvalidInput("brute force needs k >= 1");
  if (std::pow(static_cast<double>(k), n) > budget.max_functions) throw BudgetExceeded("k^n exceeds the brute-force budget");
  std::map<std::vector<int>, std::int64_t> tally;
  std::vector<int> f(n, 1);
  std::vector<int> mult(k);
  for (;;) {
    std::fill(mult.begin(), mult.end(), 0);
    for (int x : f) ++mult[x - 1];
    int used = 0;
    while (used < k && mult[used] > 0) ++used;
    bool prefix = true;
    for (int v = used; v < k; ++v) prefix = prefix && mult[v] == 0;
    if (prefix) {
      const std::int64_t add = weight(score(f));
      if (add) tally[std::vector<int>(mult.begin(), mult.begin() + used)] += add;
    }
    int pos = 0;
    while (pos < n && f[pos] == k) f[pos++] = 1;
    if (pos == n) break;
    ++f[pos];
  }
  std::map<Composition, Int> out;
  for (const auto& [key, c] : tally) out[Composition(key)] = Int(c);
  return out;
}

std::int64_t count_minimizers(const GenPermGraph& q, const std::vector<int>& f) {
  std::int64_t best = 0;
  std::int64_t hits = 0;
  for (const auto& v : q.vertices()) {
    std::int64_t s = 0;
    for (int t = 0; t < q.n(); ++t) s += static_cast<std::int64_t>(f[t]) * v[t];
    if (hits == 0 || s < best) {
      best = s;
      hits = 1;
    } else if (s == best) {
      ++hits;
    }
  }
  return hits;
}

bool orientation_acyclic(int n, const std::vector<std::pair<int, int>>& edges, std::uint64_t o) {
  std::vector<std::uint32_t> out(n, 0);
  for (std::size_t t = 0; t < edges.size(); ++t) {
    auto [a, b] = edges[t];
    if (o >> t & 1u) std::swap(a, b);
    out[a - 1] |= 1u << (b - 1);
  }
  // Kahn-style peeling of sources.
  std::uint32_t alive = (1u << n) - 1;
  bool progress = true;
  while (alive && progress) {
    progress = false;
    for (int v = 0; v < n; ++v) {
      if (!(alive >> v & 1u)) continue;
      bool has_in = false;
      for (int u = 0; u < n && !has_in; ++u) has_in = (alive >> u & 1u) && (out[u] >> v & 1u);
      if (!has_in) {
        alive &= ~(1u << v);
        progress = true;
      }
    }
  }
  return alive == 0;
}

LabelledPoset orientation_poset(const SimpleGraph& g, std::uint64_t o) {
  std::vector<std::pair<int, int>> rel;
  for (std::size_t t = 0; t < g.edges.size(); ++t) {
    auto [a, b] = g.edges[t];
    rel.emplace_back(o >> t & 1u ? std::make_pair(b, a) : std::make_pair(a, b));
  }
  std::vector<int> labels(g.n);
  std::iota(labels.begin(), labels.end(), 1);
  return LabelledPoset(std::move(labels), rel);
}

// Adjacency-bitset deletion-contraction.
std::vector<Int> chromatic_rec(int n, std::vector<std::uint32_t> adj) {
  int a = -1;
  int b = -1;
  for (int u = 0; u < n && a < 0; ++u) {
    if (adj[u]) {
      a = u;
      b = std::countr_zero(adj[u]);
    }
  }
  if (a < 0) {
    std::vector<Int> p(n + 1);
    p[n] = 1;
    return p;
  }
  // Deletion.
  auto del = adj;
  del[a] &= ~(1u << b);
  del[b] &= ~(1u << a);
  auto pd = chromatic_rec(n, del);
  // Contraction of b into a, then remove vertex b.
  auto con = del;
  con[a] |= con[b];
  for (int u = 0; u < n; ++u) {
    if (con[u] >> b & 1u) con[u] = (con[u] & ~(1u << b)) | (1u << a);
  }
  con[a] &= ~(1u << a);
  std::vector<std::uint32_t> shrunk;
  for (int u = 0; u < n; ++u) {
    if (u == b) continue;
    std::uint32_t row = 0;
    for (int w = 0; w < n; ++w) {
      if (w == b || !(con[u] >> w & 1u)) continue;
      row |= 1u << (w < b ? w : w - 1);
    }
    shrunk.push_back(row);
  }
  auto pc = chromatic_rec(n - 1, shrunk);
  for (std::size_t i = 0; i < pc.size(); ++i) pd[i] -= pc[i];
  return pd;
}

}  // namespace

GenPermGraph::GenPermGraph(int n, std::vector<Point> vertices, std::vector<std::pair<int, int>> edges)
    : n_(n), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (n < 0) throw InvalidInput("negative dimension");
  if (vertices_.empty()) throw InvalidInput("polytope needs at least one vertex");
  for (const auto& v : vertices_) {
    if (static_cast<int>(v.size()) != n) throw InvalidInput("vertex has wrong dimension");
  }
  const int nv = static_cast<int>(vertices_.size());
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= nv || b >= nv || a == b) throw InvalidInput("edge endpoint out of range");
    int i, j;
    if (!edge_direction(vertices_[a], vertices_[b], i, j)) {
      throw InvalidInput("edge " + std::to_string(a) + "-" + std::to_string(b) + " is not parallel to some e_i - e_j");
    }
    parent[find(a)] = find(b);
  }
  for (int v = 1; v < nv; ++v) {
    if (find(v) != find(0)) throw InvalidInput("vertex-edge graph is disconnected");
  }
}

std::string GenPermGraph::str() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  j["vertices"] = vertices_;
  auto e = nlohmann::ordered_json::array();
  for (auto [a, b] : edges_) e.push_back({a, b});
  j["edges"] = e;
  return j.dump();
}

GenPermGraph GenPermGraph::parse(std::string_view json) {
  try {
    auto j = nlohmann::json::parse(json);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (e.size() != 2) throw InvalidInput("edge must have two endpoints");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return GenPermGraph(j.at("n").get<int>(), j.at("vertices").get<std::vector<Point>>(), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("polytope JSON: ") + e.what());
  }
}

SimpleGraph SimpleGraph::make(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0 || n > 16) throw InvalidInput("graphs limited to 16 vertices");
  for (auto& [a, b] : edges) {
    if (a < 1 || b < 1 || a > n || b > n) throw InvalidInput("edge endpoint outside [n]");
    if (a == b) throw InvalidInput("self-loops are not allowed");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw InvalidInput("repeated edge");
  return SimpleGraph{n, std::move(edges)};
}

SimpleGraph SimpleGraph::parse(std::string_view text) {
  const auto semi = text.find(';');
  std::string head(text.substr(0, semi));
  head.erase(std::remove_if(head.begin(), head.end(), ::isspace), head.end());
  const int n = static_cast<int>(Int::parse(head).to_int64());
  std::vector<std::pair<int, int>> edges;
  if (semi != std::string_view::npos) {
    std::stringstream ss{std::string(text.substr(semi + 1))};
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
      if (tok.empty()) continue;
      const auto dash = tok.find('-');
      if (dash == std::string::npos) throw InvalidInput("bad edge: " + tok);
      edges.emplace_back(static_cast<int>(Int::parse(tok.substr(0, dash)).to_int64()),
                         static_cast<int>(Int::parse(tok.substr(dash + 1)).to_int64()));
    }
  }
  return make(n, std::move(edges));
}

std::string SimpleGraph::str() const {
  std::string s = std::to_string(n) + ";";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    s += (i ? ", " : " ") + std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
  }
  return s;
}

LabelledPoset vertex_poset(const GenPermGraph& q, std::size_t v) {
  if (v >= q.vertices().size()) throw InvalidInput("vertex index out of range");
  std::vector<std::pair<int, int>> rel;
  for (auto [a, b] : q.edges()) {
    if (static_cast<std::size_t>(a) != v && static_cast<std::size_t>(b) != v) continue;
    const int other = static_cast<std::size_t>(a) == v ? b : a;
    int i, j;
    edge_direction(q.vertices()[v], q.vertices()[other], i, j);
    rel.emplace_back(i + 1, j + 1);
  }
  std::vector<int> labels(q.n());
  std::iota(labels.begin(), labels.end(), 1);
  return LabelledPoset(std::move(labels), rel);
}

QSymFn F_genperm(const GenPermGraph& q, const GenPermOptions& opt) {
  if (q.vertices().size() > opt.max_vertices) throw BudgetExceeded("too many vertices");
  return sum_strict_enumerators(q.n(), q.vertices().size(), [&](std::size_t v) { return vertex_poset(q, v); }, opt);
}

QSymFn F_star_genperm(const GenPermGraph& q, const GenPermOptions& opt) {
  QSymFn s = antipode(F_genperm(q, opt));
  return q.n() % 2 ? -s : s;
}

IntValuedPoly phi_genperm(const GenPermGraph& q, const GenPermOptions& opt) { return specialize_ones(F_genperm(q, opt)); }

IntValuedPoly phi_star_genperm(const GenPermGraph& q, const GenPermOptions& opt) {
  return specialize_ones(F_star_genperm(q, opt));
}

bool reciprocity_check(const GenPermGraph& q, const GenPermOptions& opt) {
  const Int sign = q.n() % 2 ? Int(-1) : Int(1);
  return phi_genperm(q, opt).reflected() == phi_star_genperm(q, opt) * sign;
}

std::map<Composition, Int> F_genperm_bruteforce(const GenPermGraph& q, int k, const BruteForceBudget& budget) {
  return value_pattern_count(
      q.n(), k, budget, [&](const std::vector<int>& f) { return count_minimizers(q, f); },
      [](std::int64_t hits) { return hits == 1 ? std::int64_t{1} : std::int64_t{0}; });
}

std::map<Composition, Int> F_star_genperm_bruteforce(const GenPermGraph& q, int k, const BruteForceBudget& budget) {
  return value_pattern_count(
      q.n(), k, budget, [&](const std::vector<int>& f) { return count_minimizers(q, f); },
      [](std::int64_t hits) { return hits; });
}

GenPermGraph from_matroid(const Matroid& m) {
  std::vector<Point> verts;
  for (Mask b : m.bases()) {
    Point p(m.n(), 0);
    for (int e : mask_elements(b)) p[e - 1] = 1;
    verts.push_back(std::move(p));
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < m.bases().size(); ++a) {
    for (std::size_t b = a + 1; b < m.bases().size(); ++b) {
      if (std::popcount(m.bases()[a] ^ m.bases()[b]) == 2) edges.emplace_back(a, b);
    }
  }
  return GenPermGraph(m.n(), std::move(verts), std::move(edges));
}

std::vector<std::uint64_t> acyclic_orientations(const SimpleGraph& g, std::size_t max_count) {
  if (g.edges.size() > 40) throw BudgetExceeded("too many edges to orient");
  std::vector<std::uint64_t> out;
  for (std::uint64_t o = 0; o < (std::uint64_t{1} << g.edges.size()); ++o) {
    if (orientation_acyclic(g.n, g.edges, o)) {
      out.push_back(o);
      if (out.size() > max_count) throw BudgetExceeded("too many acyclic orientations");
    }
  }
  return out;
}

GenPermGraph graphic_zonotope(const SimpleGraph& g) {
  const auto orients = acyclic_orientations(g);
  std::vector<Point> verts;
  for (std::uint64_t o : orients) {
    Point p(g.n, 0);
    for (std::size_t t = 0; t < g.edges.size(); ++t) {
      const int tail = o >> t & 1u ? g.edges[t].second : g.edges[t].first;
      ++p[tail - 1];
    }
    verts.push_back(std::move(p));
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < orients.size(); ++a) {
    for (std::size_t b = a + 1; b < orients.size(); ++b) {
      if (std::popcount(orients[a] ^ orients[b]) == 1) edges.emplace_back(a, b);
    }
  }
  return GenPermGraph(g.n, std::move(verts), std::move(edges));
}

QSymFn graphic_zonotope_F(const SimpleGraph& g, const GenPermOptions& opt) {
  const auto orients = acyclic_orientations(g, opt.max_vertices);
  return sum_strict_enumerators(g.n, orients.size(), [&](std::size_t v) { return orientation_poset(g, orients[v]); },
                                opt);
}

std::map<Composition, Int> proper_coloring_counts(const SimpleGraph& g, int k, const BruteForceBudget& budget) {
  return value_pattern_count(
      g.n, k, budget,
      [&](const std::vector<int>& c) {
        for (auto [a, b] : g.edges) {
          if (c[a - 1] == c[b - 1]) return std::int64_t{0};
        }
        return std::int64_t{1};
      },
      [](std::int64_t ok) { return ok; });
}

std::vector<Int> chromatic_polynomial(const SimpleGraph& g) {
  std::vector<std::uint32_t> adj(g.n, 0);
  for (auto [a, b] : g.edges) {
    adj[a - 1] |= 1u << (b - 1);
    adj[b - 1] |= 1u << (a - 1);
  }
  return chromatic_rec(g.n, adj);
}

Int evaluate_power(const std::vector<Int>& coeffs, const Int& m) {
  Int acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * m + coeffs[i];
  return acc;
}

bool chromatic_poly_check(const SimpleGraph& g, int max_m, const GenPermOptions& opt) {
  if (max_m < 0) max_m = g.n + 2;
  const IntValuedPoly p = specialize_ones(graphic_zonotope_F(g, opt));
  const auto chi = chromatic_polynomial(g);
  for (int m = 1; m <= max_m; ++m) {
    if (p(Int(m)) != evaluate_power(chi, Int(m))) return false;
  }
  return true;
}

std::vector<SimpleGraph> all_graphs(int n) {
  if (n < 0 || n > 6) throw BudgetExceeded("graph catalog limited to 6 vertices");
  std::vector<std::pair<int, int>> slots;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) slots.emplace_back(a, b);
  }
  std::map<std::pair<int, int>, int> slot_of;
  for (std::size_t t = 0; t < slots.size(); ++t) slot_of[slots[t]] = static_cast<int>(t);
  std::set<std::uint32_t> seen;
  std::vector<SimpleGraph> out;
  std::vector<int> perm(n);
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::uint32_t best = mask;
    std::iota(perm.begin(), perm.end(), 1);
    do {
      std::uint32_t img = 0;
      for (std::size_t t = 0; t < slots.size(); ++t) {
        if (!(mask >> t & 1u)) continue;
        int a = perm[slots[t].first - 1];
        int b = perm[slots[t].second - 1];
        if (a > b) std::swap(a, b);
        img |= 1u << slot_of[{a, b}];
      }
      best = std::min(best, img);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!seen.insert(best).second) continue;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t t = 0; t < slots.size(); ++t) {
      if (best >> t & 1u) edges.push_back(slots[t]);
    }
    out.push_back(SimpleGraph::make(n, std::move(edges)));
  }
  return out;
}

}  // namespace matqsym
