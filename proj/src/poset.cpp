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

#include "matqsym/poset.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "matqsym/errors.hpp"

namespace matqsym {

namespace {

constexpr int kMaxElements = 64;

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

void close_transitively(std::vector<std::uint64_t>& above) {
  const int n = static_cast<int>(above.size());
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (above[i] & bit(k)) above[i] |= above[k];
    }
  }
}

std::vector<std::uint64_t> below_masks(const LabelledPoset& p) {
  std::vector<std::uint64_t> below(p.size(), 0);
  for (int i = 0; i < p.size(); ++i) {
    for (std::uint64_t m = p.above(i); m; m &= m - 1) below[std::countr_zero(m)] |= bit(i);
  }
  return below;
}

void check_size(const LabelledPoset& p, const EnumerationLimits& lim) {
  if (p.size() > lim.max_poset_size) {
    throw BudgetExceeded("poset has " + std::to_string(p.size()) + " elements; limit is " +
                         std::to_string(lim.max_poset_size));
  }
}

// Topological order, smallest available label first.
std::vector<int> first_extension(const LabelledPoset& p) {
  const auto below = below_masks(p);
  std::vector<int> order;
  std::uint64_t placed = 0;
  while (static_cast<int>(order.size()) < p.size()) {
    for (int j = 0; j < p.size(); ++j) {
      if (!(placed & bit(j)) && (below[j] & ~placed) == 0) {
        order.push_back(j);
        placed |= bit(j);
        break;
      }
    }
  }
  return order;
}

}  // namespace

LabelledPoset::LabelledPoset(std::vector<int> labels, const std::vector<std::pair<int, int>>& relations)
    : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw InvalidInput("poset labels must be distinct");
  }
  if (!labels_.empty() && labels_.front() < 1) throw InvalidInput("poset labels must be positive");
  if (size() > kMaxElements) throw InvalidInput("posets are limited to 64 elements");
  above_.assign(labels_.size(), 0);
  for (auto [a, b] : relations) {
    const int ia = index_of(a);
    const int ib = index_of(b);
    if (ia < 0 || ib < 0) throw InvalidInput("relation uses unknown label");
    above_[ia] |= bit(ib);
  }
  close_transitively(above_);
  for (int i = 0; i < size(); ++i) {
    if (above_[i] & bit(i)) throw InvalidInput("poset relations contain a cycle");
  }
}

LabelledPoset LabelledPoset::antichain(std::vector<int> labels) { return LabelledPoset(std::move(labels), {}); }

LabelledPoset LabelledPoset::antichain_on(int n) {
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  return antichain(std::move(labels));
}

LabelledPoset LabelledPoset::chain(const std::vector<int>& bottom_to_top) {
  std::vector<std::pair<int, int>> rel;
  for (std::size_t i = 0; i + 1 < bottom_to_top.size(); ++i) rel.emplace_back(bottom_to_top[i], bottom_to_top[i + 1]);
  return LabelledPoset(bottom_to_top, rel);
}

int LabelledPoset::index_of(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return -1;
  return static_cast<int>(it - labels_.begin());
}

std::uint64_t LabelledPoset::below(int idx) const {
  std::uint64_t m = 0;
  for (int i = 0; i < size(); ++i) {
    if (above_[i] & bit(idx)) m |= bit(i);
  }
  return m;
}

bool LabelledPoset::less(int a, int b) const {
  const int ia = index_of(a);
  const int ib = index_of(b);
  return ia >= 0 && ib >= 0 && (above_[ia] & bit(ib));
}

std::vector<std::pair<int, int>> LabelledPoset::relations() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i) {
    for (std::uint64_t m = above_[i]; m; m &= m - 1) out.emplace_back(labels_[i], labels_[std::countr_zero(m)]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> LabelledPoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i) {
    std::uint64_t implied = 0;
    for (std::uint64_t m = above_[i]; m; m &= m - 1) implied |= above_[std::countr_zero(m)];
    for (std::uint64_t m = above_[i] & ~implied; m; m &= m - 1) {
      out.emplace_back(labels_[i], labels_[std::countr_zero(m)]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool LabelledPoset::is_natural() const {
  // Indices follow label order, so a relation i < j is natural iff i < j.
  for (int i = 0; i < size(); ++i) {
    if (above_[i] & (bit(i) - 1)) return false;
  }
  return true;
}

bool LabelledPoset::is_strict() const {
  for (int i = 0; i < size(); ++i) {
    if (above_[i] & ~((bit(i) << 1) - 1)) return false;
  }
  return true;
}

LabelledPoset LabelledPoset::relabelled(const std::map<int, int>& relabel) const {
  auto map_label = [&](int a) {
    auto it = relabel.find(a);
    if (it == relabel.end()) throw InvalidInput("relabelling misses label " + std::to_string(a));
    return it->second;
  };
  std::vector<int> labels;
  for (int a : labels_) labels.push_back(map_label(a));
  std::vector<std::pair<int, int>> rel;
  for (auto [a, b] : relations()) rel.emplace_back(map_label(a), map_label(b));
  return LabelledPoset(std::move(labels), rel);
}

std::string LabelledPoset::str() const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] != i + 1) throw InvalidInput("text form needs labels 1..n");
  }
  std::string out = std::to_string(size()) + ";";
  bool first = true;
  for (auto [a, b] : covers()) {
    out += first ? " " : ", ";
    out += std::to_string(a) + "<" + std::to_string(b);
    first = false;
  }
  return out;
}

LabelledPoset LabelledPoset::parse(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw InvalidInput("poset text needs 'n;' prefix");
  std::string head(text.substr(0, semi));
  const int n = static_cast<int>(Int::parse(std::string(head.begin(), std::remove_if(head.begin(), head.end(), ::isspace))).to_int64());
  if (n < 0) throw InvalidInput("negative poset size");
  std::vector<std::pair<int, int>> rel;
  std::stringstream ss{std::string(text.substr(semi + 1))};
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    const auto lt = tok.find('<');
    if (lt == std::string::npos) throw InvalidInput("bad relation: " + tok);
    const int a = static_cast<int>(Int::parse(tok.substr(0, lt)).to_int64());
    const int b = static_cast<int>(Int::parse(tok.substr(lt + 1)).to_int64());
    if (a < 1 || a > n || b < 1 || b > n) throw InvalidInput("relation label out of range: " + tok);
    rel.emplace_back(a, b);
  }
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  return LabelledPoset(std::move(labels), rel);
}

std::vector<std::vector<int>> linear_extensions(const LabelledPoset& p, const EnumerationLimits& lim) {
  check_size(p, lim);
  const int n = p.size();
  const auto below = below_masks(p);
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t placed) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (!(placed & bit(j)) && (below[j] & ~placed) == 0) {
        cur.push_back(p.labels()[j]);
        rec(placed | bit(j));
        cur.pop_back();
      }
    }
  };
  rec(0);
  return out;
}

Composition descent_composition(const std::vector<int>& w) {
  if (w.empty()) return {};
  std::vector<int> parts;
  int run = 1;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] < w[i + 1]) {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  parts.push_back(run);
  return Composition(std::move(parts));
}

std::vector<std::uint64_t> descent_counts(const LabelledPoset& p, const EnumerationLimits& lim) {
  check_size(p, lim);
  const int n = p.size();
  std::vector<std::uint64_t> counts(std::size_t{1} << std::max(n - 1, 0), 0);
  if (n == 0) {
    counts[0] = 1;
    return counts;
  }
  const auto below = below_masks(p);
  const auto& labels = p.labels();
  // Depth-first over linear extensions, accumulating the descent set.
  std::function<void(std::uint64_t, int, int, std::uint32_t)> rec = [&](std::uint64_t placed, int last, int pos,
                                                                        std::uint32_t des) {
    if (pos == n) {
      ++counts[des];
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (!(placed & bit(j)) && (below[j] & ~placed) == 0) {
        std::uint32_t d = des;
        if (pos > 0 && labels[last] > labels[j]) d |= 1u << (pos - 1);
        rec(placed | bit(j), j, pos + 1, d);
      }
    }
  };
  rec(0, -1, 0, 0);
  return counts;
}

QSymFn enumerator(const LabelledPoset& p, const EnumerationLimits& lim) {
  const auto counts = descent_counts(p, lim);
  if (p.size() == 0) return QSymFn::one(Basis::Fundamental);
  QSymFn out(Basis::Fundamental);
  for (std::uint32_t m = 0; m < counts.size(); ++m) {
    if (counts[m]) out.add(Composition::from_subset(p.size(), m), Int(static_cast<std::int64_t>(counts[m])));
  }
  return out;
}

std::map<std::vector<int>, Int> ppartition_count(const LabelledPoset& p, int k, const EnumerationLimits& lim) {
  const int n = p.size();
  std::map<std::vector<int>, Int> out;
  if (k <= 0) return out;
  if (std::pow(static_cast<double>(k), n) > lim.max_bruteforce) {
    throw BudgetExceeded("P-partition brute force k^n exceeds budget");
  }
  const auto rel = p.relations();
  std::vector<std::tuple<int, int, bool>> checks;
  for (auto [a, b] : rel) checks.emplace_back(p.index_of(a), p.index_of(b), a > b);
  std::vector<int> f(n, 1);
  for (;;) {
    bool ok = true;
    for (auto [i, j, strict] : checks) {
      if (strict ? !(f[i] < f[j]) : !(f[i] <= f[j])) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<int> mult(k, 0);
      for (int v : f) ++mult[v - 1];
      out[mult] += 1;
    }
    int pos = 0;
    while (pos < n && f[pos] == k) f[pos++] = 1;
    if (pos == n) break;
    ++f[pos];
  }
  return out;
}

LabelledPoset disjoint_sum(const LabelledPoset& a, const LabelledPoset& b) {
  std::vector<int> labels = a.labels();
  for (int x : b.labels()) {
    if (a.index_of(x) >= 0) throw InvalidInput("disjoint sum: label collision on " + std::to_string(x));
    labels.push_back(x);
  }
  auto rel = a.relations();
  for (auto r : b.relations()) rel.push_back(r);
  return LabelledPoset(std::move(labels), rel);
}

LabelledPoset ordinal_sum(const LabelledPoset& a, const LabelledPoset& b) {
  const LabelledPoset d = disjoint_sum(a, b);
  auto rel = d.relations();
  for (int x : a.labels()) {
    for (int y : b.labels()) rel.emplace_back(x, y);
  }
  return LabelledPoset(d.labels(), rel);
}

LabelledPoset standardize(const LabelledPoset& p) {
  std::map<int, int> relabel;
  for (int i = 0; i < p.size(); ++i) relabel[p.labels()[i]] = i + 1;
  return p.relabelled(relabel);
}

LabelledPoset psi(const LabelledPoset& p, int m) {
  if (m < 1) throw InvalidInput("psi needs m >= 1");
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    if (p.labels()[i] != i + 1) throw InvalidInput("psi needs a poset on [n]");
  }
  std::vector<int> top;
  for (int i = n + 1; i < n + m; ++i) top.push_back(i);
  return ordinal_sum(ordinal_sum(p, LabelledPoset::antichain({n + m})), LabelledPoset::antichain(top));
}

LabelledPoset natural_labelling(const LabelledPoset& p) {
  const auto order = first_extension(p);
  std::map<int, int> relabel;
  for (std::size_t t = 0; t < order.size(); ++t) relabel[p.labels()[order[t]]] = static_cast<int>(t) + 1;
  return p.relabelled(relabel);
}

LabelledPoset strict_labelling(const LabelledPoset& p) {
  const auto order = first_extension(p);
  std::map<int, int> relabel;
  const int n = p.size();
  for (std::size_t t = 0; t < order.size(); ++t) relabel[p.labels()[order[t]]] = n - static_cast<int>(t);
  return p.relabelled(relabel);
}

SigmaString::SigmaString(std::string bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw InvalidInput("sigma string must be nonempty");
  for (char c : bits_) {
    if (c != '0' && c != '1') throw InvalidInput("sigma string must be binary: " + bits_);
  }
  if (bits_[0] != '0') throw InvalidInput("sigma string must start with 0: " + bits_);
}

std::vector<SigmaString> all_sigmas(int n) {
  if (n < 1) throw InvalidInput("sigma strings need n >= 1");
  std::vector<SigmaString> out;
  for (std::uint32_t m = 0; m < (1u << (n - 1)); ++m) {
    std::string s = "0";
    for (int i = n - 2; i >= 0; --i) s += (m >> i & 1u) ? '1' : '0';
    out.emplace_back(std::move(s));
  }
  return out;
}

BlocksAndZ blocks_and_z(const SigmaString& s) {
  BlocksAndZ out;
  std::vector<int> block;
  int zeros = 0;
  for (int i = 1; i <= s.size(); ++i) {
    if (i > 1 && s.bit(i - 1) && !s.bit(i)) {
      out.blocks.push_back(std::move(block));
      out.zeros.push_back(zeros);
      block.clear();
      zeros = 0;
    }
    block.push_back(i);
    if (!s.bit(i)) ++zeros;
  }
  out.blocks.push_back(std::move(block));
  out.zeros.push_back(zeros);
  return out;
}

SigmaString sigma_from_blocks(const BlocksAndZ& bz) {
  std::string s;
  for (std::size_t i = 0; i < bz.blocks.size(); ++i) {
    const int len = static_cast<int>(bz.blocks[i].size());
    s += std::string(bz.zeros[i], '0') + std::string(len - bz.zeros[i], '1');
  }
  return SigmaString(std::move(s));
}

LabelledPoset r_sigma(const SigmaString& s) {
  const int n = s.size();
  std::vector<int> labels(n);
  std::vector<std::pair<int, int>> rel;
  for (int i = 1; i <= n; ++i) {
    labels[i - 1] = i;
    if (s.bit(i)) continue;
    for (int j = i + 1; j <= n; ++j) {
      if (s.bit(j)) rel.emplace_back(i, j);
    }
  }
  return LabelledPoset(std::move(labels), rel);
}

LabelledPoset q_sigma(const SigmaString& s) {
  const int n = s.size();
  int lead = 0;
  while (lead < n && !s.bit(lead + 1)) ++lead;
  LabelledPoset q = LabelledPoset::antichain_on(lead);
  for (int p = lead + 1; p <= n; ++p) {
    if (s.bit(p)) {
      q = ordinal_sum(q, LabelledPoset::antichain({p}));
      continue;
    }
    // New element p above p-1 only, then swap labels p-1 and p.
    auto labels = q.labels();
    labels.push_back(p);
    auto rel = q.relations();
    rel.emplace_back(p - 1, p);
    LabelledPoset grown(std::move(labels), rel);
    std::map<int, int> swap;
    for (int x = 1; x <= p; ++x) swap[x] = x;
    swap[p - 1] = p;
    swap[p] = p - 1;
    q = grown.relabelled(swap);
  }
  return q;
}

LabelledPoset stanley_p_alpha(const Composition& a) {
  LabelledPoset p;
  int next = 1;
  for (int part : a.parts()) {
    std::vector<int> level;
    for (int i = 0; i < part; ++i) level.push_back(next++);
    p = ordinal_sum(p, LabelledPoset::antichain(std::move(level)));
  }
  return p;
}

std::vector<int> w_sigma_descents(const SigmaString& s) {
  std::vector<int> out;
  for (int i = 1; i < s.size(); ++i) {
    if (!s.bit(i + 1)) out.push_back(i);
  }
  return out;
}

}  // namespace matqsym
