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

#include "latrepr/irreducibles.hpp"

#include <algorithm>
#include <unordered_map>

#include "latrepr/filters.hpp"

namespace latrepr {

namespace {

ElementSet join_irreducible_set(const FiniteLattice& l) {
  const std::size_t n = l.size();
  ElementSet out(n);
  for (Element x = 0; x < n; ++x) {
    if (x == l.bottom()) continue;
    bool irreducible = true;
    for (Element a = 0; a < n && irreducible; ++a) {
      for (Element b = a; b < n && irreducible; ++b) {
        if (l.join(a, b) == x && a != x && b != x) irreducible = false;
      }
    }
    if (irreducible) out.set(x);
  }
  return out;
}

// Searches every subset of the elements strictly below x for one whose join
// is x. Subsets containing anything not below x cannot join to x, so this
// covers all subsets of L \ {x}.
bool is_join_of_smaller(const FiniteLattice& l, Element x, const std::vector<Element>& below,
                        std::size_t next, Element acc) {
  if (acc == x) return true;
  if (next == below.size()) return false;
  return is_join_of_smaller(l, x, below, next + 1, l.join(acc, below[next])) ||
         is_join_of_smaller(l, x, below, next + 1, acc);
}

ElementSet completely_join_irreducible_set(const FiniteLattice& l) {
  const std::size_t n = l.size();
  ElementSet out(n);
  for (Element x = 0; x < n; ++x) {
    ElementSet strictly_below = l.poset().down(x);
    strictly_below.reset(x);
    if (!is_join_of_smaller(l, x, members_of(strictly_below), 0, l.bottom())) out.set(x);
  }
  return out;
}

}  // namespace

IrreducibleReport irreducibles(const FiniteLattice& l) {
  const FiniteLattice d = dual(l);
  IrreducibleReport r;
  r.join_irr = join_irreducible_set(l);
  r.meet_irr = join_irreducible_set(d);
  if (l.size() <= kDefinitionalIrreducibleCap) {
    r.completely_join_irr = completely_join_irreducible_set(l);
    r.completely_meet_irr = completely_join_irreducible_set(d);
  } else {
    r.completely_join_irr = r.join_irr;
    r.completely_meet_irr = r.meet_irr;
    r.used_finite_shortcut = true;
  }
  return r;
}

bool is_join_dense(const FiniteLattice& l, const ElementSet& s) {
  // If x = ⋁T with T ⊆ s then T ⊆ ↓x, so ⋁(s ∩ ↓x) = x.
  for (Element x = 0; x < l.size(); ++x) {
    if (l.join_of(s & l.poset().down(x)) != x) return false;
  }
  return true;
}

bool is_meet_dense(const FiniteLattice& l, const ElementSet& s) { return is_join_dense(dual(l), s); }

namespace {

void collect_downsets(const FinitePoset& p, const std::vector<Element>& order, std::size_t next,
                      ElementSet& current, std::vector<ElementSet>& out) {
  if (next == order.size()) {
    out.push_back(current);
    return;
  }
  const Element e = order[next];
  collect_downsets(p, order, next + 1, current, out);
  ElementSet strictly_below = p.down(e);
  strictly_below.reset(e);
  if (strictly_below.is_subset_of(current)) {
    current.set(e);
    collect_downsets(p, order, next + 1, current, out);
    current.reset(e);
  }
}

}  // namespace

std::vector<ElementSet> downsets(const FinitePoset& p) {
  // Sorting by the size of the principal downset gives a linear extension.
  std::vector<Element> order(p.size());
  for (Element e = 0; e < p.size(); ++e) order[e] = e;
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return p.down(a).count() < p.down(b).count(); });
  std::vector<ElementSet> out;
  ElementSet current(p.size());
  collect_downsets(p, order, 0, current, out);
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

FiniteLattice downset_lattice(const FinitePoset& p) {
  const auto sets = downsets(p);
  const std::size_t n = sets.size();
  std::vector<ElementSet> up(n, ElementSet(n));
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sets[i].is_subset_of(sets[j])) up[i].set(j);
    }
    std::string label = "{";
    bool first = true;
    for_each_member(sets[i], [&](Element e) {
      if (!first) label += ",";
      label += p.label(e);
      first = false;
    });
    labels[i] = label + "}";
  }
  return FiniteLattice::from_poset(FinitePoset::from_order(std::move(up), std::move(labels)));
}

BirkhoffIsomorphism birkhoff_roundtrip(const FiniteLattice& l) {
  if (auto triple = distributivity_violation(l)) throw NotDistributive(*triple);
  BirkhoffIsomorphism out;
  const ElementSet j = irreducibles(l).join_irr;
  out.join_irr_index = members_of(j);
  out.join_irreducibles = l.poset().induced(j);
  out.downsets = downset_lattice(out.join_irreducibles);

  const auto sets = downsets(out.join_irreducibles);
  std::unordered_map<ElementSet, Element, ElementSetHash> position;
  for (std::size_t i = 0; i < sets.size(); ++i) position.emplace(sets[i], static_cast<Element>(i));

  const std::size_t n = l.size();
  out.map.resize(n);
  ElementSet hit(out.downsets.size());
  for (Element x = 0; x < n; ++x) {
    ElementSet image(out.join_irr_index.size());
    for (std::size_t k = 0; k < out.join_irr_index.size(); ++k) {
      if (l.leq(out.join_irr_index[k], x)) image.set(k);
    }
    auto it = position.find(image);
    if (it == position.end()) throw IsomorphismFailure("image of " + std::to_string(x) + " is not a downset");
    out.map[x] = it->second;
    hit.set(it->second);
  }
  if (n != out.downsets.size() || hit.count() != n) {
    throw IsomorphismFailure("join-irreducible map is not a bijection");
  }
  const auto& d = out.downsets;
  if (out.map[l.bottom()] != d.bottom() || out.map[l.top()] != d.top()) {
    throw IsomorphismFailure("join-irreducible map does not preserve bounds");
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (out.map[l.meet(a, b)] != d.meet(out.map[a], out.map[b]) ||
          out.map[l.join(a, b)] != d.join(out.map[a], out.map[b])) {
        throw IsomorphismFailure("join-irreducible map does not preserve operations at (" + std::to_string(a) +
                                 "," + std::to_string(b) + ")");
      }
    }
  }
  return out;
}

FiniteLattice canonical_extension(const FiniteLattice& l) {
  if (auto triple = distributivity_violation(l)) throw NotDistributive(*triple);
  const auto filters = enumerate_prime_filters(l);
  const std::size_t m = filters.size();
  std::vector<ElementSet> up(m, ElementSet(m));
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      // Reverse inclusion, so that downsets here are up-sets of the filter space.
      if (filters[k].carrier.is_subset_of(filters[i].carrier)) up[i].set(k);
    }
    labels[i] = "F" + std::to_string(i);
  }
  return downset_lattice(FinitePoset::from_order(std::move(up), std::move(labels)));
}

bool is_doubly_algebraic(const FiniteLattice& l) {
  if (!is_distributive(l)) return false;
  const auto r = irreducibles(l);
  return is_join_dense(l, r.completely_join_irr) && is_meet_dense(l, r.completely_meet_irr);
}

}  // namespace latrepr
