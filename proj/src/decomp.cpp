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

#include "matqsym/decomp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "matqsym/errors.hpp"

namespace matqsym {

namespace {

using Vec = std::vector<std::int64_t>;

Vec to_vec(const QuotientVector& q) {
  Vec v;
  for (const auto& c : q.coords) v.push_back(c.to_int64());
  return v;
}

std::int64_t dot(const Vec& a, const Vec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

// Integer l with l.g > 0 for every g, by perceptron updates.
std::optional<Vec> positive_functional(const std::vector<Vec>& gens) {
  if (gens.empty()) return std::nullopt;
  Vec l(gens[0].size(), 0);
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < l.size(); ++i) l[i] += g[i];
  }
  for (int pass = 0; pass < 10000; ++pass) {
    bool changed = false;
    for (const auto& g : gens) {
      if (dot(l, g) <= 0) {
        for (std::size_t i = 0; i < l.size(); ++i) l[i] += g[i];
        changed = true;
      }
    }
    if (!changed) return l;
  }
  return std::nullopt;
}

class Searcher {
 public:
  Searcher(std::vector<Vec> gens, std::optional<Vec> ell, const SearchBudget& budget, int min_terms)
      : gens_(std::move(gens)), ell_(std::move(ell)), budget_(budget), min_terms_(min_terms) {
    if (ell_) {
      for (const auto& g : gens_) weight_.push_back(dot(*ell_, g));
    }
  }

  bool capped() const { return capped_; }

  SearchStatus run(const Vec& target, std::vector<std::size_t>& witness) {
    const std::int64_t w = ell_ ? dot(*ell_, target) : 0;
    Vec rem = target;
    const bool found = rec(0, rem, w, 0);
    if (found) {
      witness = chosen_;
      return SearchStatus::Found;
    }
    return exhausted_ ? SearchStatus::BudgetExhausted : SearchStatus::NotFound;
  }

 private:
  bool rec(std::size_t start, Vec& rem, std::int64_t rem_w, int depth) {
    if (++nodes_ > budget_.max_nodes) {
      exhausted_ = true;
      return false;
    }
    if (is_zero(rem) && depth >= min_terms_) return true;
    if (ell_ && rem_w <= 0) return false;
    if (depth >= budget_.max_terms) {
      capped_ = true;
      return false;
    }
    const bool settled = depth >= min_terms_;
    std::tuple<std::size_t, int, bool, Vec> key{start, budget_.max_terms - depth, settled, rem};
    if (failed_.count(key)) return false;
    for (std::size_t i = start; i < gens_.size(); ++i) {
      if (ell_ && weight_[i] > rem_w) continue;
      for (std::size_t c = 0; c < rem.size(); ++c) rem[c] -= gens_[i][c];
      chosen_.push_back(i);
      const bool ok = rec(i, rem, ell_ ? rem_w - weight_[i] : 0, depth + 1);
      for (std::size_t c = 0; c < rem.size(); ++c) rem[c] += gens_[i][c];
      if (ok) return true;
      chosen_.pop_back();
      if (exhausted_) return false;
    }
    if (failed_.size() < 2'000'000) failed_.insert(std::move(key));
    return false;
  }

  std::vector<Vec> gens_;
  std::optional<Vec> ell_;
  std::vector<std::int64_t> weight_;
  SearchBudget budget_;
  int min_terms_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  bool capped_ = false;
  std::vector<std::size_t> chosen_;
  std::set<std::tuple<std::size_t, int, bool, Vec>> failed_;
};

Matroid matroid_from_json(const nlohmann::json& j) { return parse_matroid_json(j.dump()); }

}  // namespace

std::string DecompositionCertificate::str() const {
  std::string s = "{\"parent\": " + parent.str() + ", \"pieces\": [";
  for (std::size_t i = 0; i < pieces.size(); ++i) s += (i ? ", " : "") + pieces[i].str();
  return s + "]}";
}

DecompositionCertificate parse_certificate_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("certificate JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("parent") || !j.contains("pieces") || !j["pieces"].is_array()) {
    throw InvalidInput("certificate JSON needs \"parent\" and a \"pieces\" array");
  }
  DecompositionCertificate cert;
  cert.parent = matroid_from_json(j["parent"]);
  for (const auto& p : j["pieces"]) cert.pieces.push_back(matroid_from_json(p));
  return cert;
}

QuotientVector barF(const Matroid& m, const InvariantOptions& opt) {
  if (m.n() == 0) throw InvalidInput("barF needs a nonempty ground set");
  return project_mod_m2(F(m, opt), cached_quotient_presentation(m.n()));
}

int polytope_dimension(const Matroid& m) { return m.n() - static_cast<int>(min_separators(m).size()); }

ValuationCheck check_valuation(const DecompositionCertificate& cert, const InvariantOptions& opt) {
  const Matroid& parent = cert.parent;
  const auto& pieces = cert.pieces;
  auto invalid = [](std::string why) { return ValuationCheck{CertificateStatus::Invalid, std::move(why)}; };
  if (pieces.empty()) return invalid("no pieces");
  if (pieces.size() > 16) return invalid("more than 16 pieces");
  const int dim = polytope_dimension(parent);
  std::set<Mask> covered;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Matroid& p = pieces[i];
    if (p.n() != parent.n() || p.rank() != parent.rank()) return invalid("piece " + std::to_string(i) + ": n or rank differs");
    for (Mask b : p.bases()) {
      if (!parent.is_base(b)) return invalid("piece " + std::to_string(i) + ": base " + mask_str(b) + " not in parent");
      covered.insert(b);
    }
    if (polytope_dimension(p) != dim) return invalid("piece " + std::to_string(i) + ": not full-dimensional");
  }
  if (covered.size() != parent.base_count()) return invalid("pieces do not cover the parent's bases");

  const std::size_t t = pieces.size();
  QSymFn alternating(Basis::Fundamental);
  for (std::uint32_t sub = 1; sub < (1u << t); ++sub) {
    std::vector<Mask> common;
    bool first = true;
    for (std::size_t i = 0; i < t; ++i) {
      if (!(sub >> i & 1u)) continue;
      if (first) {
        common = pieces[i].bases();
        first = false;
      } else {
        std::vector<Mask> next;
        std::set_intersection(common.begin(), common.end(), pieces[i].bases().begin(), pieces[i].bases().end(),
                              std::back_inserter(next));
        common = std::move(next);
      }
    }
    if (common.empty()) continue;
    if (auto fail = exchange_violation(parent.n(), common)) {
      return invalid("intersection of pieces " + std::to_string(sub) + " is not a matroid: " + fail->str());
    }
    const Matroid inter = Matroid::unchecked(parent.n(), common);
    const int size = std::popcount(sub);
    if (size == 2 && polytope_dimension(inter) >= dim) {
      return invalid("two pieces overlap in full dimension");
    }
    const QSymFn f = F(inter, opt);
    if (size % 2) {
      alternating += f;
    } else {
      alternating -= f;
    }
  }
  if (alternating == F(parent, opt)) return {CertificateStatus::Verified, "valuation identity holds"};
  return {CertificateStatus::IdentityFailure, "inclusion-exclusion of F over the pieces differs from F(parent)"};
}

std::vector<HyperplaneSplit> find_hyperplane_splits(const Matroid& m) {
  if (m.n() > 10) throw BudgetExceeded("hyperplane split search limited to 10 elements");
  const int dim = polytope_dimension(m);
  std::set<std::pair<std::vector<Mask>, std::vector<Mask>>> seen;
  std::vector<HyperplaneSplit> out;
  for (Mask s = 1; s <= m.ground(); ++s) {
    for (int k = 0; k <= m.rank(); ++k) {
      std::vector<Mask> lo, hi;
      for (Mask b : m.bases()) {
        const int c = std::popcount(b & s);
        if (c <= k) lo.push_back(b);
        if (c >= k) hi.push_back(b);
      }
      if (lo.size() == m.base_count() || hi.size() == m.base_count()) continue;
      if (lo.empty() || hi.empty()) continue;
      if (exchange_violation(m.n(), lo) || exchange_violation(m.n(), hi)) continue;
      const Matroid a = Matroid::unchecked(m.n(), lo);
      const Matroid b = Matroid::unchecked(m.n(), hi);
      if (polytope_dimension(a) != dim || polytope_dimension(b) != dim) continue;
      auto key = std::minmax(lo, hi);
      if (!seen.insert({key.first, key.second}).second) continue;
      out.push_back({s, k, {m, {a, b}}});
    }
    if (s == m.ground()) break;
  }
  return out;
}

void SemigroupInstance::add(std::string label, QuotientVector v) {
  if (!vectors.empty() && v.coords.size() != vectors.front().coords.size()) {
    throw InvalidInput("semigroup generators have different lengths");
  }
  labels.push_back(std::move(label));
  vectors.push_back(std::move(v));
}

SemigroupInstance semigroup_of(const std::vector<Matroid>& ms, const InvariantOptions& opt) {
  SemigroupInstance out;
  if (ms.empty()) return out;
  out.n = ms.front().n();
  for (std::size_t i = 0; i < ms.size(); ++i) out.add("#" + std::to_string(i) + " " + ms[i].str(), barF(ms[i], opt));
  return out;
}

SemigroupInstance weak_image_generators(const Matroid& m, const InvariantOptions& opt) {
  std::vector<Matroid> imgs;
  for (auto& w : weak_images(m, true)) {
    if (w != m) imgs.push_back(std::move(w));
  }
  SemigroupInstance out = semigroup_of(imgs, opt);
  out.n = m.n();
  return out;
}

SearchResult decomposable_search(const QuotientVector& target, const SemigroupInstance& gens,
                                 const SearchBudget& budget, int min_terms) {
  // Distinct nonzero generator vectors, remembering the first index of each.
  std::map<Vec, std::size_t> first;
  for (std::size_t i = 0; i < gens.vectors.size(); ++i) {
    Vec v = to_vec(gens.vectors[i]);
    if (v.size() != target.coords.size()) throw InvalidInput("target and generators have different lengths");
    if (!is_zero(v)) first.emplace(std::move(v), i);
  }
  std::vector<Vec> distinct;
  std::vector<std::size_t> origin;
  for (const auto& [v, i] : first) {
    distinct.push_back(v);
    origin.push_back(i);
  }
  SearchResult res;
  auto ell = positive_functional(distinct);
  res.positive_functional = ell.has_value();
  Searcher search(distinct, ell, budget, min_terms);
  std::vector<std::size_t> witness;
  res.status = search.run(to_vec(target), witness);
  res.exhaustive = !search.capped();
  for (std::size_t w : witness) res.witness.push_back(origin[w]);
  std::sort(res.witness.begin(), res.witness.end());
  return res;
}

std::vector<std::size_t> hilbert_basis(const SemigroupInstance& gens, const SearchBudget& budget) {
  std::vector<std::size_t> out;
  std::set<Vec> done;
  for (std::size_t i = 0; i < gens.vectors.size(); ++i) {
    Vec v = to_vec(gens.vectors[i]);
    if (is_zero(v) || !done.insert(v).second) continue;
    const auto res = decomposable_search(gens.vectors[i], gens, budget);
    if (res.status == SearchStatus::BudgetExhausted) {
      throw BudgetExceeded("Hilbert basis search ran out of budget at generator " + gens.labels[i]);
    }
    if (res.status == SearchStatus::NotFound) {
      if (!res.exhaustive) {
        throw BudgetExceeded("Hilbert basis search hit the term bound at generator " + gens.labels[i]);
      }
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace matqsym
