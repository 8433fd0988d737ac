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

#include "matqsym/matroid.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

#include <json.hpp>

#include "matqsym/errors.hpp"

namespace matqsym {

namespace {

// Packs the bits of m lying in `support` into the low bits, in order.
Mask compress(Mask m, Mask support) {
  Mask out = 0;
  int pos = 0;
  for (Mask s = support; s; s &= s - 1) {
    const Mask low = s & -s;
    if (m & low) out |= Mask{1} << pos;
    ++pos;
  }
  return out;
}

std::vector<Mask> sorted_unique(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Mask apply_perm(Mask m, const std::vector<int>& perm) {
  Mask out = 0;
  for (Mask s = m; s; s &= s - 1) out |= element_bit(perm[std::countr_zero(s)]);
  return out;
}

std::vector<Mask> relabelled_sorted(const std::vector<Mask>& bases, const std::vector<int>& perm) {
  std::vector<Mask> out;
  out.reserve(bases.size());
  for (Mask b : bases) out.push_back(apply_perm(b, perm));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> k_subsets(int n, int k) {
  std::vector<Mask> out;
  for (Mask m = 0; m <= full_mask(n); ++m) {
    if (std::popcount(m) == k) out.push_back(m);
    if (m == full_mask(n)) break;
  }
  return out;
}

Minor make_minor(int n_parent, Mask support, std::vector<Mask> bases) {
  Minor out;
  for (Mask& b : bases) b = compress(b, support);
  const int n = std::popcount(support);
  out.matroid = Matroid::unchecked(n, sorted_unique(std::move(bases)));
  out.labels = mask_elements(support);
  (void)n_parent;
  return out;
}

struct Canon {
  std::vector<Mask> bases;
  std::vector<int> perm;  // element e goes to perm[e-1]
};

Canon canonicalize(const Matroid& m) {
  const int n = m.n();
  // Element signature: base degree, then sorted pair degrees.
  std::vector<std::vector<int>> sig(n);
  for (int e = 0; e < n; ++e) {
    int deg = 0;
    std::vector<int> pair;
    for (int f = 0; f < n; ++f) {
      if (f == e) continue;
      int c = 0;
      for (Mask b : m.bases()) {
        if ((b >> e & 1u) && (b >> f & 1u)) ++c;
      }
      pair.push_back(c);
    }
    for (Mask b : m.bases()) deg += static_cast<int>(b >> e & 1u);
    std::sort(pair.begin(), pair.end());
    sig[e].push_back(deg);
    sig[e].insert(sig[e].end(), pair.begin(), pair.end());
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
  // Classes of equal signature, as [begin, end) ranges of `order`.
  std::vector<std::pair<int, int>> classes;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && sig[order[j]] == sig[order[i]]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  Canon best;
  std::vector<int> perm(n);
  for (;;) {
    for (int pos = 0; pos < n; ++pos) perm[order[pos]] = pos + 1;
    auto cand = relabelled_sorted(m.bases(), perm);
    if (best.perm.empty() || cand < best.bases) {
      best.bases = std::move(cand);
      best.perm = perm;
    }
    // Odometer over per-class permutations.
    std::size_t c = 0;
    for (; c < classes.size(); ++c) {
      auto [lo, hi] = classes[c];
      if (std::next_permutation(order.begin() + lo, order.begin() + hi)) break;
    }
    if (c == classes.size()) break;
  }
  if (n == 0) best.bases = m.bases();
  return best;
}

}  // namespace

std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

Mask mask_of(const std::vector<int>& elements) {
  Mask m = 0;
  for (int e : elements) m |= element_bit(e);
  return m;
}

std::string mask_str(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int e : mask_elements(m)) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

std::string ExchangeFailure::str() const {
  return "exchange axiom fails: B=" + mask_str(b1) + ", B'=" + mask_str(b2) + ", e=" + std::to_string(e) +
         " has no replacement in B'\\B";
}

std::optional<ExchangeFailure> exchange_violation(int n, const std::vector<Mask>& bases) {
  std::vector<char> table(std::size_t{1} << n, 0);
  for (Mask b : bases) table[b] = 1;
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      if (b1 == b2) continue;
      const Mask gain = b2 & ~b1;
      for (Mask d = b1 & ~b2; d; d &= d - 1) {
        const Mask eb = d & -d;
        bool ok = false;
        for (Mask g = gain; g && !ok; g &= g - 1) ok = table[(b1 ^ eb) | (g & -g)];
        if (!ok) return ExchangeFailure{b1, b2, std::countr_zero(eb) + 1};
      }
    }
  }
  return std::nullopt;
}

Matroid Matroid::from_bases(int n, std::vector<Mask> bases) {
  if (n < 0 || n > kMaxGround) throw InvalidInput("ground set size must be in [0, 20]");
  if (bases.empty()) throw InvalidInput("base family is empty");
  bases = sorted_unique(std::move(bases));
  const int r = std::popcount(bases.front());
  for (Mask b : bases) {
    if (b & ~full_mask(n)) throw InvalidInput("base " + mask_str(b) + " leaves the ground set");
    if (std::popcount(b) != r) throw InvalidInput("bases have unequal cardinalities");
  }
  if (auto fail = exchange_violation(n, bases)) throw InvalidInput(fail->str());
  return Matroid(n, r, std::move(bases));
}

Matroid Matroid::from_base_lists(int n, const std::vector<std::vector<int>>& bases) {
  std::vector<Mask> masks;
  for (const auto& b : bases) {
    Mask m = 0;
    for (int e : b) {
      if (e < 1 || e > n) throw InvalidInput("element " + std::to_string(e) + " outside [1, n]");
      if (m & element_bit(e)) throw InvalidInput("repeated element in a base");
      m |= element_bit(e);
    }
    masks.push_back(m);
  }
  return from_bases(n, std::move(masks));
}

Matroid Matroid::unchecked(int n, std::vector<Mask> bases) {
  const int r = bases.empty() ? 0 : std::popcount(bases.front());
  return Matroid(n, r, std::move(bases));
}

Matroid Matroid::uniform(int r, int n) {
  if (r < 0 || r > n || n > kMaxGround) throw InvalidInput("uniform matroid needs 0 <= r <= n <= 20");
  return Matroid(n, r, k_subsets(n, r));
}

bool Matroid::is_base(Mask b) const { return std::binary_search(bases_.begin(), bases_.end(), b); }

int Matroid::rank_of(Mask a) const {
  int best = 0;
  for (Mask b : bases_) {
    best = std::max(best, std::popcount(b & a));
    if (best == rank_) break;
  }
  return best;
}

std::string Matroid::str() const {
  std::string s = "{\"n\": " + std::to_string(n_) + ", \"bases\": [";
  for (std::size_t i = 0; i < bases_.size(); ++i) {
    if (i) s += ", ";
    s += "[";
    bool first = true;
    for (int e : mask_elements(bases_[i])) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    s += "]";
  }
  return s + "]}";
}

Matroid parse_matroid_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("matroid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("bases")) {
    throw InvalidInput("matroid JSON needs \"n\" and \"bases\"");
  }
  try {
    return Matroid::from_base_lists(j.at("n").get<int>(), j.at("bases").get<std::vector<std::vector<int>>>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("matroid JSON: ") + e.what());
  }
}

Matroid dual(const Matroid& m) {
  std::vector<Mask> b;
  for (Mask x : m.bases()) b.push_back(m.ground() & ~x);
  return Matroid::unchecked(m.n(), sorted_unique(std::move(b)));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  if (a.n() + b.n() > kMaxGround) throw InvalidInput("direct sum exceeds 20 elements");
  std::vector<Mask> out;
  for (Mask x : a.bases()) {
    for (Mask y : b.bases()) out.push_back(x | (y << a.n()));
  }
  return Matroid::unchecked(a.n() + b.n(), sorted_unique(std::move(out)));
}

Minor restrict_to(const Matroid& m, Mask a) {
  a &= m.ground();
  const int ra = m.rank_of(a);
  std::vector<Mask> out;
  for (Mask b : m.bases()) {
    if (std::popcount(b & a) == ra) out.push_back(b & a);
  }
  return make_minor(m.n(), a, std::move(out));
}

Minor contract(const Matroid& m, Mask a) {
  a &= m.ground();
  const int ra = m.rank_of(a);
  std::vector<Mask> out;
  for (Mask b : m.bases()) {
    if (std::popcount(b & a) == ra) out.push_back(b & ~a);
  }
  return make_minor(m.n(), m.ground() & ~a, std::move(out));
}

Minor delete_set(const Matroid& m, Mask a) { return restrict_to(m, m.ground() & ~a); }

Matroid relabel(const Matroid& m, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != m.n()) throw InvalidInput("relabelling has wrong length");
  return Matroid::unchecked(m.n(), relabelled_sorted(m.bases(), perm));
}

Mask loops(const Matroid& m) {
  Mask any = 0;
  for (Mask b : m.bases()) any |= b;
  return m.ground() & ~any;
}

Mask coloops(const Matroid& m) {
  Mask all = m.ground();
  for (Mask b : m.bases()) all &= b;
  return all;
}

bool splits_completely(const Matroid& m) { return m.base_count() == 1; }

std::vector<Mask> min_separators(const Matroid& m) {
  const int n = m.n();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Mask b : m.bases()) {
    for (Mask in = b; in; in &= in - 1) {
      const int e = std::countr_zero(in);
      for (Mask out = m.ground() & ~b; out; out &= out - 1) {
        const int f = std::countr_zero(out);
        if (m.is_base((b & ~(Mask{1} << e)) | (Mask{1} << f))) parent[find(e)] = find(f);
      }
    }
  }
  std::vector<Mask> parts;
  std::vector<int> slot(n, -1);
  for (int e = 0; e < n; ++e) {
    const int root = find(e);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(parts.size());
      parts.push_back(0);
    }
    parts[slot[root]] |= Mask{1} << e;
  }
  return parts;
}

bool is_separator(const Matroid& m, Mask a) {
  a &= m.ground();
  return m.rank_of(a) + m.rank_of(m.ground() & ~a) == m.rank();
}

bool is_connected(const Matroid& m) { return min_separators(m).size() == 1; }

MinWeightBases min_weight_bases(const Matroid& m, const WeightFunction& f) {
  if (static_cast<int>(f.values.size()) != m.n()) throw InvalidInput("weight function has wrong length");
  MinWeightBases out;
  bool first = true;
  for (Mask b : m.bases()) {
    std::int64_t w = 0;
    for (Mask s = b; s; s &= s - 1) w += f.values[std::countr_zero(s)];
    if (first || w < out.weight) {
      out.weight = w;
      out.bases.clear();
      first = false;
    }
    if (w == out.weight) out.bases.push_back(b);
  }
  return out;
}

bool is_generic(const Matroid& m, const WeightFunction& f) { return min_weight_bases(m, f).bases.size() == 1; }

Mask greedy_base(const Matroid& m, const WeightFunction& f) {
  if (static_cast<int>(f.values.size()) != m.n()) throw InvalidInput("weight function has wrong length");
  std::vector<int> order(m.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return f.values[a] < f.values[b]; });
  Mask acc = 0;
  for (int e : order) {
    if (m.is_independent(acc | (Mask{1} << e))) acc |= Mask{1} << e;
  }
  return acc;
}

LabelledPoset base_poset(const Matroid& m, Mask b) {
  if (!m.is_base(b)) throw InvalidInput(mask_str(b) + " is not a base");
  std::vector<std::pair<int, int>> rel;
  for (Mask in = b; in; in &= in - 1) {
    const Mask eb = in & -in;
    for (Mask out = m.ground() & ~b; out; out &= out - 1) {
      const Mask fb = out & -out;
      if (m.is_base((b ^ eb) | fb)) rel.emplace_back(std::countr_zero(eb) + 1, std::countr_zero(fb) + 1);
    }
  }
  std::vector<int> labels(m.n());
  std::iota(labels.begin(), labels.end(), 1);
  return LabelledPoset(std::move(labels), rel);
}

Intersection intersect(const Matroid& a, const Matroid& b) {
  if (a.n() != b.n() || a.rank() != b.rank()) throw InvalidInput("intersect needs equal ground sets and ranks");
  Intersection out;
  std::set_intersection(a.bases().begin(), a.bases().end(), b.bases().begin(), b.bases().end(),
                        std::back_inserter(out.bases));
  if (out.bases.empty()) return out;
  out.failure = exchange_violation(a.n(), out.bases);
  if (!out.failure) out.matroid = Matroid::unchecked(a.n(), out.bases);
  return out;
}

Matroid add_isthmus(const Matroid& m) { return direct_sum(m, Matroid::isthmus()); }

Matroid principal_extension(const Matroid& m) {
  if (m.n() + 1 > kMaxGround) throw InvalidInput("extension exceeds 20 elements");
  const Mask e = element_bit(m.n() + 1);
  std::vector<Mask> out = m.bases();
  if (m.rank() > 0) {
    for (Mask b : m.bases()) {
      for (Mask s = b; s; s &= s - 1) out.push_back((b & ~(s & -s)) | e);
    }
  }
  return Matroid::unchecked(m.n() + 1, sorted_unique(std::move(out)));
}

Matroid freedom_matroid(const SigmaString& s) {
  Matroid m;
  for (char c : s.bits()) m = c == '0' ? add_isthmus(m) : principal_extension(m);
  return m;
}

Matroid freedom_bases_direct(const SigmaString& s) {
  const auto bz = blocks_and_z(s);
  const int n = s.size();
  const int r = std::accumulate(bz.zeros.begin(), bz.zeros.end(), 0);
  std::vector<Mask> flats;
  std::vector<int> caps;
  Mask acc = 0;
  int cap = 0;
  for (std::size_t i = 0; i < bz.blocks.size(); ++i) {
    acc |= mask_of(bz.blocks[i]);
    cap += bz.zeros[i];
    flats.push_back(acc);
    caps.push_back(cap);
  }
  std::vector<Mask> out;
  for (Mask b : k_subsets(n, r)) {
    bool ok = true;
    for (std::size_t i = 0; i < flats.size() && ok; ++i) ok = std::popcount(b & flats[i]) <= caps[i];
    if (ok) out.push_back(b);
  }
  return Matroid::from_bases(n, std::move(out));
}

std::vector<Mask> canonical_form(const Matroid& m) { return canonicalize(m).bases; }

bool is_isomorphic(const Matroid& a, const Matroid& b, std::vector<int>* witness) {
  if (a.n() != b.n() || a.rank() != b.rank() || a.base_count() != b.base_count()) return false;
  if (std::popcount(loops(a)) != std::popcount(loops(b)) || std::popcount(coloops(a)) != std::popcount(coloops(b))) {
    return false;
  }
  if (a.n() > 12) throw BudgetExceeded("isomorphism test limited to 12 elements");
  const Canon ca = canonicalize(a);
  const Canon cb = canonicalize(b);
  if (ca.bases != cb.bases) return false;
  if (witness) {
    std::vector<int> inv_b(b.n());
    for (int e = 0; e < b.n(); ++e) inv_b[cb.perm[e] - 1] = e + 1;
    witness->assign(a.n(), 0);
    for (int e = 0; e < a.n(); ++e) (*witness)[e] = inv_b[ca.perm[e] - 1];
  }
  return true;
}

namespace {

// Hyperplanes of m: closures of independent (r-1)-sets.
std::vector<Mask> hyperplanes(const Matroid& m) {
  std::set<Mask> out;
  for (Mask b : m.bases()) {
    for (Mask s = b; s; s &= s - 1) {
      const Mask i = b & ~(s & -s);
      Mask cl = i;
      for (Mask o = m.ground() & ~i; o; o &= o - 1) {
        if (m.rank_of(i | (o & -o)) == m.rank() - 1) cl |= o & -o;
      }
      out.insert(cl);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Matroid> single_element_extensions(const Matroid& m, const EnumerationBudget& budget) {
  const int n = m.n() + 1;
  const Mask e = element_bit(n);
  if (m.rank() == 0) return {Matroid::unchecked(n, m.bases())};
  const auto hyp = hyperplanes(m);
  const std::size_t h = hyp.size();
  if (h >= 63 || (std::uint64_t{1} << h) > budget.max_extension_subsets) {
    throw BudgetExceeded("too many hyperplane subsets for single-element extension");
  }
  // For each modular pair of hyperplanes: the set of hyperplanes containing
  // their intersection. A linear subclass is closed under these.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> closure_rules;
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = i + 1; j < h; ++j) {
      const Mask meet = hyp[i] & hyp[j];
      if (m.rank_of(meet) != m.rank() - 2) continue;
      std::uint64_t above = 0;
      for (std::size_t k = 0; k < h; ++k) {
        if ((hyp[k] & meet) == meet) above |= std::uint64_t{1} << k;
      }
      closure_rules.emplace_back((std::uint64_t{1} << i) | (std::uint64_t{1} << j), above);
    }
  }
  // Independent (r-1)-sets with their hyperplane index.
  std::map<Mask, std::size_t> indep;
  for (Mask b : m.bases()) {
    for (Mask s = b; s; s &= s - 1) {
      const Mask i = b & ~(s & -s);
      if (indep.count(i)) continue;
      for (std::size_t k = 0; k < h; ++k) {
        if ((hyp[k] & i) == i && m.rank_of(hyp[k]) == m.rank() - 1) {
          indep[i] = k;
          break;
        }
      }
    }
  }
  std::vector<Matroid> out;
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << h); ++sub) {
    bool linear = true;
    for (auto [pair, above] : closure_rules) {
      if ((sub & pair) == pair && (sub & above) != above) {
        linear = false;
        break;
      }
    }
    if (!linear) continue;
    std::vector<Mask> bases = m.bases();
    for (auto [i, k] : indep) {
      if (!(sub >> k & 1u)) bases.push_back(i | e);
    }
    bases = sorted_unique(std::move(bases));
    if (!exchange_violation(n, bases)) out.push_back(Matroid::unchecked(n, std::move(bases)));
  }
  return out;
}

std::vector<Matroid> canonical_catalog(std::vector<Matroid> ms) {
  std::set<std::vector<Mask>> seen;
  std::vector<Matroid> out;
  for (const auto& m : ms) {
    auto c = canonical_form(m);
    if (seen.insert(c).second) out.push_back(Matroid::unchecked(m.n(), std::move(c)));
  }
  std::sort(out.begin(), out.end(), [](const Matroid& a, const Matroid& b) { return a.bases() < b.bases(); });
  return out;
}

const std::vector<Matroid>& all_matroids(int n, int r, const EnumerationBudget& budget) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Matroid>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({n, r});
    if (it != cache.end()) return it->second;
  }
  std::vector<Matroid> raw;
  if (n == 0) {
    if (r == 0) raw.push_back(Matroid());
  } else if (r >= 0 && r <= n) {
    if (r > 0) {
      for (const auto& m : all_matroids(n - 1, r - 1, budget)) raw.push_back(add_isthmus(m));
    }
    for (const auto& m : all_matroids(n - 1, r, budget)) {
      for (auto& x : single_element_extensions(m, budget)) raw.push_back(std::move(x));
    }
  }
  auto catalog = canonical_catalog(std::move(raw));
  std::lock_guard lock(mu);
  return cache.emplace(std::make_pair(n, r), std::move(catalog)).first->second;
}

}  // namespace

std::vector<Matroid> enumerate_matroids(int n, int r, bool connected_only, const EnumerationBudget& budget) {
  if (n < 0 || r < 0) throw InvalidInput("enumerate needs n, r >= 0");
  if (n > budget.max_n) throw BudgetExceeded("enumeration limited to n <= " + std::to_string(budget.max_n));
  if (r > n) return {};
  std::vector<Matroid> out;
  for (const auto& m : all_matroids(n, r, budget)) {
    if (!connected_only || is_connected(m)) out.push_back(m);
  }
  return out;
}

std::vector<Matroid> enumerate_matroids_exhaustive(int n, int r, bool connected_only) {
  if (r < 0 || r > n) return {};
  const auto sets = k_subsets(n, r);
  if (sets.size() > 20) throw BudgetExceeded("exhaustive enumeration needs binom(n, r) <= 20");
  std::vector<Matroid> found;
  for (std::uint32_t sub = 1; sub < (1u << sets.size()); ++sub) {
    std::vector<Mask> bases;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (sub >> i & 1u) bases.push_back(sets[i]);
    }
    if (!exchange_violation(n, bases)) found.push_back(Matroid::unchecked(n, std::move(bases)));
  }
  auto catalog = canonical_catalog(std::move(found));
  std::vector<Matroid> out;
  for (auto& m : catalog) {
    if (!connected_only || is_connected(m)) out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matroid> weak_images(const Matroid& m, bool connected_only) {
  if (m.n() > 8) throw BudgetExceeded("weak images limited to 8 elements");
  std::set<std::vector<Mask>> found;
  std::vector<int> perm(m.n());
  for (const auto& c : enumerate_matroids(m.n(), m.rank(), connected_only)) {
    if (c.base_count() > m.base_count()) continue;
    std::iota(perm.begin(), perm.end(), 1);
    do {
      auto b = relabelled_sorted(c.bases(), perm);
      if (std::includes(m.bases().begin(), m.bases().end(), b.begin(), b.end())) found.insert(std::move(b));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<Matroid> out;
  for (const auto& b : found) out.push_back(Matroid::unchecked(m.n(), b));
  return out;
}

std::vector<int> lambda_partition(const Matroid& m) {
  if (m.rank() != 2) throw InvalidInput("lambda_partition needs rank 2");
  if (loops(m)) throw InvalidInput("lambda_partition needs a loopless matroid");
  std::vector<int> sizes;
  Mask seen = 0;
  for (int e = 1; e <= m.n(); ++e) {
    if (seen & element_bit(e)) continue;
    Mask cls = element_bit(e);
    for (int f = e + 1; f <= m.n(); ++f) {
      if (!m.is_base(element_bit(e) | element_bit(f))) cls |= element_bit(f);
    }
    seen |= cls;
    sizes.push_back(std::popcount(cls));
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

Matroid rank2_from_lambda(const std::vector<int>& lambda) {
  if (lambda.size() < 2) throw InvalidInput("rank-2 matroid needs at least two parallel classes");
  std::vector<int> cls;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 1) throw InvalidInput("parallel class sizes must be positive");
    cls.insert(cls.end(), lambda[i], static_cast<int>(i));
  }
  const int n = static_cast<int>(cls.size());
  if (n > kMaxGround) throw InvalidInput("rank-2 matroid exceeds 20 elements");
  std::vector<Mask> bases;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (cls[a] != cls[b]) bases.push_back((Mask{1} << a) | (Mask{1} << b));
    }
  }
  return Matroid::unchecked(n, sorted_unique(std::move(bases)));
}

TuttePoly::TuttePoly(Terms t) {
  for (auto& [k, c] : t) {
    if (!c.is_zero()) terms_.emplace(k, c);
  }
}

TuttePoly TuttePoly::swapped() const {
  Terms t;
  for (const auto& [k, c] : terms_) t[{k.second, k.first}] = c;
  return TuttePoly(std::move(t));
}

std::string TuttePoly::str() const {
  std::vector<std::pair<std::pair<int, int>, Int>> items(terms_.begin(), terms_.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  if (items.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c0] : items) {
    Int c = c0;
    const bool neg = c.sign() < 0;
    if (neg) c = -c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono;
    auto var = [&](const char* v, int p) {
      if (p == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (p > 1) mono += "^" + std::to_string(p);
    };
    var("x", k.first);
    var("y", k.second);
    if (mono.empty()) {
      out += c.str();
    } else if (c == Int(1)) {
      out += mono;
    } else {
      out += c.str() + "*" + mono;
    }
    first = false;
  }
  return out;
}

TuttePoly tutte(const Matroid& m) {
  if (m.n() > 16) throw BudgetExceeded("Tutte polynomial limited to 16 elements");
  const int n = m.n();
  const int r = m.rank();
  // count[a][b]: subsets with corank a and nullity b.
  std::vector<std::vector<std::int64_t>> count(r + 1, std::vector<std::int64_t>(n + 1, 0));
  for (Mask a = 0;; ++a) {
    const int ra = m.rank_of(a);
    ++count[r - ra][std::popcount(a) - ra];
    if (a == m.ground()) break;
  }
  TuttePoly::Terms t;
  for (int a = 0; a <= r; ++a) {
    for (int b = 0; b <= n; ++b) {
      if (!count[a][b]) continue;
      // (x-1)^a (y-1)^b
      for (int i = 0; i <= a; ++i) {
        for (int j = 0; j <= b; ++j) {
          Int c = binomial(Int(a), i) * binomial(Int(b), j) * Int(count[a][b]);
          if ((a - i + b - j) % 2) c = -c;
          t[{i, j}] += c;
        }
      }
    }
  }
  return TuttePoly(std::move(t));
}

}  // namespace matqsym
