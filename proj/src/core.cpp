//  Copyright 2026 The latrepr Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "latrepr/core.hpp"

#include <algorithm>
#include <numeric>

namespace latrepr {

namespace {

std::vector<ElementSet> transpose(const std::vector<ElementSet>& rows) {
  const std::size_t n = rows.size();
  std::vector<ElementSet> out(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    for_each_member(rows[i], [&](Element j) { out[j].set(i); });
  }
  return out;
}

}  // namespace

FinitePoset::FinitePoset(std::vector<ElementSet> up, std::vector<std::string> labels)
    : up_(std::move(up)), labels_(std::move(labels)) {
  down_ = transpose(up_);
  if (!labels_.empty() && labels_.size() != up_.size()) {
    throw Error("label count " + std::to_string(labels_.size()) + " does not match carrier size " +
                std::to_string(up_.size()));
  }
}

FinitePoset FinitePoset::from_hasse(std::size_t n,
                                    std::span<const std::pair<Element, Element>> covers,
                                    std::vector<std::string> labels) {
  std::vector<ElementSet> up(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  for (const auto& [lo, hi] : covers) {
    if (lo >= n) throw IndexOutOfRange(lo, n);
    if (hi >= n) throw IndexOutOfRange(hi, n);
    up[lo].set(hi);
  }
  // Warshall over bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i][k]) up[i] |= up[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (up[i][j] && up[j][i]) {
        throw CycleDetected(static_cast<Element>(i), static_cast<Element>(j));
      }
    }
  }
  return FinitePoset(std::move(up), std::move(labels));
}

FinitePoset FinitePoset::from_order(std::vector<ElementSet> leq, std::vector<std::string> labels) {
  const std::size_t n = leq.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n) throw Error("order matrix row has wrong width");
    if (!leq[i][i]) throw Error("order relation is not reflexive at " + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = leq[i].find_next(i); j != ElementSet::npos; j = leq[i].find_next(j)) {
      if (leq[j][i]) throw CycleDetected(static_cast<Element>(i), static_cast<Element>(j));
    }
    for_each_member(leq[i], [&](Element j) {
      if (!leq[j].is_subset_of(leq[i])) {
        throw Error("order relation is not transitive through " + std::to_string(j));
      }
    });
  }
  return FinitePoset(std::move(leq), std::move(labels));
}

FinitePoset poset_from_hasse(std::size_t n, std::span<const std::pair<Element, Element>> covers) {
  return FinitePoset::from_hasse(n, covers);
}

std::vector<std::pair<Element, Element>> FinitePoset::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for_each_member(up_[a], [&](Element b) {
      if (b != a && (up_[a] & down_[b]).count() == 2) out.emplace_back(static_cast<Element>(a), b);
    });
  }
  return out;
}

FinitePoset FinitePoset::induced(const ElementSet& keep) const {
  const auto kept = members_of(keep);
  std::vector<ElementSet> rows(kept.size(), ElementSet(kept.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (leq(kept[i], kept[j])) rows[i].set(j);
    }
    if (!labels_.empty()) labels.push_back(labels_[kept[i]]);
  }
  return FinitePoset(std::move(rows), std::move(labels));
}

FinitePoset FinitePoset::reversed() const { return FinitePoset(down_, labels_); }

std::string FinitePoset::label(Element e) const {
  return labels_.empty() ? std::to_string(e) : labels_[e];
}

std::optional<std::pair<Element, Element>> FiniteLattice::lattice_violation(const FinitePoset& p) {
  const std::size_t n = p.size();
  auto has_greatest = [&](const ElementSet& bounds, bool below) {
    for (auto g = bounds.find_first(); g != ElementSet::npos; g = bounds.find_next(g)) {
      const auto& cone = below ? p.down(static_cast<Element>(g)) : p.up(static_cast<Element>(g));
      if (bounds.is_subset_of(cone)) return true;
    }
    return false;
  };
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (!has_greatest(p.down(a) & p.down(b), true) || !has_greatest(p.up(a) & p.up(b), false)) {
        return std::make_pair(a, b);
      }
    }
  }
  return std::nullopt;
}

FiniteLattice FiniteLattice::from_poset(FinitePoset poset) {
  const std::size_t n = poset.size();
  if (n == 0) throw Error("a lattice needs at least one element");
  FiniteLattice out;
  out.meet_.assign(n * n, 0);
  out.join_.assign(n * n, 0);
  auto extremal = [&](const ElementSet& bounds, bool below) -> std::optional<Element> {
    for (auto g = bounds.find_first(); g != ElementSet::npos; g = bounds.find_next(g)) {
      const auto e = static_cast<Element>(g);
      if (bounds.is_subset_of(below ? poset.down(e) : poset.up(e))) return e;
    }
    return std::nullopt;
  };
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      auto m = extremal(poset.down(a) & poset.down(b), true);
      if (!m) throw NotALattice(a, b, "greatest lower bound");
      auto j = extremal(poset.up(a) & poset.up(b), false);
      if (!j) throw NotALattice(a, b, "least upper bound");
      out.meet_[a * n + b] = out.meet_[b * n + a] = *m;
      out.join_[a * n + b] = out.join_[b * n + a] = *j;
    }
  }
  Element bottom = 0;
  Element top = 0;
  for (Element e = 1; e < n; ++e) {
    bottom = out.meet_[bottom * n + e];
    top = out.join_[top * n + e];
  }
  out.bottom_ = bottom;
  out.top_ = top;
  out.poset_ = std::move(poset);
  return out;
}

Element FiniteLattice::meet_of(const ElementSet& s) const {
  Element acc = top_;
  for_each_member(s, [&](Element e) { acc = meet(acc, e); });
  return acc;
}

Element FiniteLattice::join_of(const ElementSet& s) const {
  Element acc = bottom_;
  for_each_member(s, [&](Element e) { acc = join(acc, e); });
  return acc;
}

std::optional<std::array<Element, 3>> distributivity_violation(const FiniteLattice& l) {
  const auto n = static_cast<Element>(l.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) {
          return std::array<Element, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_distributive(const FiniteLattice& l) { return !distributivity_violation(l).has_value(); }

std::optional<BigMeetViolation> vee_bigmeet_violation(const FiniteLattice& l) {
  const std::size_t n = l.size();
  constexpr std::size_t kCap = 24;
  if (n > kCap) throw CarrierTooLarge(n, kCap);
  for (std::size_t k = 1; k <= n; ++k) {
    // Gosper's hack: all n-bit masks with k bits, ascending.
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
      ElementSet s(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1U) s.set(i);
      }
      const Element inf = l.meet_of(s);
      for (Element a = 0; a < n; ++a) {
        Element rhs = l.top();
        for_each_member(s, [&](Element x) { rhs = l.meet(rhs, l.join(a, x)); });
        if (l.join(a, inf) != rhs) return BigMeetViolation{a, s};
      }
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return std::nullopt;
}

bool is_vee_bigmeet_distributive(const FiniteLattice& l) { return !vee_bigmeet_violation(l).has_value(); }

FiniteLattice dual(const FiniteLattice& l) {
  FiniteLattice out;
  out.poset_ = l.poset_.reversed();
  out.meet_ = l.join_;
  out.join_ = l.meet_;
  out.bottom_ = l.top_;
  out.top_ = l.bottom_;
  return out;
}

ProductIndex::ProductIndex(std::vector<std::size_t> radices) : radices_(std::move(radices)) {
  for (auto r : radices_) total_ *= r;
}

ProductIndex::ProductIndex(std::span<const FiniteLattice> factors) {
  for (const auto& f : factors) radices_.push_back(f.size());
  for (auto r : radices_) total_ *= r;
}

std::vector<Element> ProductIndex::coordinates(Element e) const {
  std::vector<Element> out(radices_.size());
  std::size_t rest = e;
  for (std::size_t i = radices_.size(); i-- > 0;) {
    out[i] = static_cast<Element>(rest % radices_[i]);
    rest /= radices_[i];
  }
  return out;
}

Element ProductIndex::encode(std::span<const Element> coords) const {
  std::size_t acc = 0;
  for (std::size_t i = 0; i < radices_.size(); ++i) acc = acc * radices_[i] + coords[i];
  return static_cast<Element>(acc);
}

FiniteLattice direct_product(std::span<const FiniteLattice> factors) {
  if (factors.empty()) throw EmptyFactorList();
  const ProductIndex index(factors);
  const std::size_t n = index.size();
  std::vector<std::vector<Element>> coords(n);
  for (std::size_t e = 0; e < n; ++e) coords[e] = index.coordinates(static_cast<Element>(e));

  std::vector<ElementSet> up(n, ElementSet(n));
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bool below = true;
      for (std::size_t i = 0; i < factors.size() && below; ++i) below = factors[i].leq(coords[a][i], coords[b][i]);
      if (below) up[a].set(b);
    }
    std::string label = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) label += ",";
      label += factors[i].label(coords[a][i]);
    }
    labels[a] = label + ")";
  }

  FiniteLattice out;
  out.meet_.resize(n * n);
  out.join_.resize(n * n);
  std::vector<Element> m(factors.size());
  std::vector<Element> j(factors.size());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < factors.size(); ++i) {
        m[i] = factors[i].meet(coords[a][i], coords[b][i]);
        j[i] = factors[i].join(coords[a][i], coords[b][i]);
      }
      out.meet_[a * n + b] = index.encode(m);
      out.join_[a * n + b] = index.encode(j);
    }
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    m[i] = factors[i].bottom();
    j[i] = factors[i].top();
  }
  out.bottom_ = index.encode(m);
  out.top_ = index.encode(j);
  out.poset_ = FinitePoset::from_order(std::move(up), std::move(labels));
  return out;
}

std::optional<Element> complement_of(const FiniteLattice& l, Element a) {
  for (Element b = 0; b < l.size(); ++b) {
    if (l.meet(a, b) == l.bottom() && l.join(a, b) == l.top()) return b;
  }
  return std::nullopt;
}

bool is_complemented(const FiniteLattice& l) {
  for (Element a = 0; a < l.size(); ++a) {
    if (!complement_of(l, a)) return false;
  }
  return true;
}

ElementSet atoms(const FiniteLattice& l) {
  ElementSet out(l.size());
  for (Element x = 0; x < l.size(); ++x) {
    if (x != l.bottom() && l.poset().down(x).count() == 2) out.set(x);
  }
  return out;
}

bool is_atomic(const FiniteLattice& l) {
  const ElementSet at = atoms(l);
  for (Element x = 0; x < l.size(); ++x) {
    if (x != l.bottom() && !l.poset().down(x).intersects(at)) return false;
  }
  return true;
}

namespace {

bool extend_isomorphism(const FinitePoset& a, const FinitePoset& b, std::vector<Element>& map,
                        ElementSet& used, Element next) {
  const std::size_t n = a.size();
  if (next == n) return true;
  const auto up_count = a.up(next).count();
  const auto down_count = a.down(next).count();
  for (Element cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    if (b.up(cand).count() != up_count || b.down(cand).count() != down_count) continue;
    bool ok = true;
    for (Element prev = 0; prev < next && ok; ++prev) {
      ok = a.leq(prev, next) == b.leq(map[prev], cand) && a.leq(next, prev) == b.leq(cand, map[prev]);
    }
    if (!ok) continue;
    map[next] = cand;
    used.set(cand);
    if (extend_isomorphism(a, b, map, used, next + 1)) return true;
    used.reset(cand);
  }
  return false;
}

std::vector<bool> min_matrix(const FinitePoset& p, std::vector<Element> perm, std::size_t fixed_front,
                             std::size_t fixed_back) {
  const std::size_t n = p.size();
  std::vector<bool> best;
  auto first = perm.begin() + static_cast<std::ptrdiff_t>(fixed_front);
  auto last = perm.end() - static_cast<std::ptrdiff_t>(fixed_back);
  std::sort(first, last);
  std::vector<bool> cur(n * n);
  do {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) cur[i * n + j] = p.leq(perm[i], perm[j]);
    }
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(first, last));
  return best;
}

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const FinitePoset& a, const FinitePoset& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<Element> map(a.size());
  ElementSet used(a.size());
  if (extend_isomorphism(a, b, map, used, 0)) return map;
  return std::nullopt;
}

std::optional<std::vector<Element>> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b) {
  return find_isomorphism(a.poset(), b.poset());
}

bool are_isomorphic(const FiniteLattice& a, const FiniteLattice& b) { return find_isomorphism(a, b).has_value(); }

std::vector<bool> canonical_form(const FinitePoset& p) {
  if (p.size() > kCanonicalFormCap) throw CarrierTooLarge(p.size(), kCanonicalFormCap);
  std::vector<Element> perm(p.size());
  std::iota(perm.begin(), perm.end(), Element{0});
  return min_matrix(p, std::move(perm), 0, 0);
}

std::vector<bool> canonical_form(const FiniteLattice& l) {
  const std::size_t n = l.size();
  if (n > kLatticeCanonicalFormCap) throw CarrierTooLarge(n, kLatticeCanonicalFormCap);
  if (n == 1) return {true};
  std::vector<Element> perm;
  perm.push_back(l.bottom());
  for (Element e = 0; e < n; ++e) {
    if (e != l.bottom() && e != l.top()) perm.push_back(e);
  }
  perm.push_back(l.top());
  return min_matrix(l.poset(), std::move(perm), 1, 1);
}

}  // namespace latrepr
