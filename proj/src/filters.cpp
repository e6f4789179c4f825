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

#include "latrepr/filters.hpp"

#include <algorithm>

namespace latrepr {

namespace {

bool is_upward_closed(const FiniteLattice& l, const ElementSet& s) {
  bool ok = true;
  for_each_member(s, [&](Element x) { ok = ok && l.poset().up(x).is_subset_of(s); });
  return ok;
}

bool is_meet_closed(const FiniteLattice& l, const ElementSet& s) {
  const auto m = members_of(s);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t k = i + 1; k < m.size(); ++k) {
      if (!s[l.meet(m[i], m[k])]) return false;
    }
  }
  return true;
}

bool is_join_prime_set(const FiniteLattice& l, const ElementSet& s) {
  const auto n = static_cast<Element>(l.size());
  for (Element a = 0; a < n; ++a) {
    if (s[a]) continue;
    for (Element b = a; b < n; ++b) {
      if (!s[b] && s[l.join(a, b)]) return false;
    }
  }
  return true;
}

// Every T ⊆ s has ⋀T ∈ s. Depth-first over members carrying the running meet.
bool all_sub_meets_inside(const FiniteLattice& l, const ElementSet& s, const std::vector<Element>& m,
                          std::size_t next, Element acc) {
  if (!s[acc]) return false;
  for (std::size_t i = next; i < m.size(); ++i) {
    if (!all_sub_meets_inside(l, s, m, i + 1, l.meet(acc, m[i]))) return false;
  }
  return true;
}

// Every S disjoint from s has ⋁S ∉ s.
bool all_outside_joins_outside(const FiniteLattice& l, const ElementSet& s, const std::vector<Element>& outside,
                               std::size_t next, Element acc) {
  if (s[acc]) return false;
  for (std::size_t i = next; i < outside.size(); ++i) {
    if (!all_outside_joins_outside(l, s, outside, i + 1, l.join(acc, outside[i]))) return false;
  }
  return true;
}

}  // namespace

FilterRecord classify_filter(const FiniteLattice& l, const ElementSet& s, ClassifyOptions options) {
  FilterRecord r;
  r.carrier = s;
  auto& f = r.flags;
  f.is_filter = s.any() && is_upward_closed(l, s) && is_meet_closed(l, s);
  if (!f.is_filter) return r;

  f.is_proper = !s[l.bottom()];
  f.is_prime = f.is_proper && is_join_prime_set(l, s);

  const Element inf = l.meet_of(s);
  const ElementSet outside = ~s;
  if (options.paranoid) {
    if (s.count() > options.cap) throw CarrierTooLarge(s.count(), options.cap);
    if (outside.count() > options.cap) throw CarrierTooLarge(outside.count(), options.cap);
    f.is_complete = all_sub_meets_inside(l, s, members_of(s), 0, l.top());
    f.is_completely_prime = f.is_prime && all_outside_joins_outside(l, s, members_of(outside), 0, l.bottom());
  } else {
    // Any T ⊆ s has ⋀T >= ⋀s, and any S disjoint from s has ⋁S <= ⋁(L \ s);
    // upward closure reduces both definitions to one membership test.
    f.is_complete = s[inf];
    f.is_completely_prime = f.is_prime && !s[l.join_of(outside)];
  }

  f.is_principal = s == l.poset().up(inf);
  if (f.is_principal) r.generator = inf;

  if (f.is_proper) {
    f.is_ultrafilter = true;
    for (Element b = 0; b < l.size() && f.is_ultrafilter; ++b) {
      if (s[b]) continue;
      bool meets_zero = false;
      for_each_member(s, [&](Element x) { meets_zero = meets_zero || l.meet(x, b) == l.bottom(); });
      f.is_ultrafilter = meets_zero;
    }
  }
  return r;
}

IdealRecord classify_ideal(const FiniteLattice& l, const ElementSet& s, ClassifyOptions options) {
  const FilterRecord d = classify_filter(dual(l), s, options);
  IdealRecord r;
  r.carrier = d.carrier;
  r.generator = d.generator;
  r.flags.is_ideal = d.flags.is_filter;
  r.flags.is_proper = d.flags.is_proper;
  r.flags.is_prime = d.flags.is_prime;
  r.flags.is_complete = d.flags.is_complete;
  r.flags.is_completely_prime = d.flags.is_completely_prime;
  r.flags.is_principal = d.flags.is_principal;
  r.flags.is_maximal = d.flags.is_ultrafilter;
  return r;
}

FilterRecord principal_filter(const FiniteLattice& l, Element a) {
  if (a >= l.size()) throw IndexOutOfRange(a, l.size());
  return classify_filter(l, l.poset().up(a));
}

IdealRecord principal_ideal(const FiniteLattice& l, Element a) {
  if (a >= l.size()) throw IndexOutOfRange(a, l.size());
  return classify_ideal(l, l.poset().down(a));
}

namespace {

void collect_antichains(const FiniteLattice& l, Element next, ElementSet& comparable, ElementSet& upset,
                        std::vector<ElementSet>& out) {
  out.push_back(upset);
  for (Element e = next; e < l.size(); ++e) {
    if (comparable[e]) continue;
    const ElementSet saved_comparable = comparable;
    const ElementSet saved_upset = upset;
    comparable |= l.poset().up(e);
    comparable |= l.poset().down(e);
    upset |= l.poset().up(e);
    collect_antichains(l, e + 1, comparable, upset, out);
    comparable = saved_comparable;
    upset = saved_upset;
  }
}

}  // namespace

std::vector<ElementSet> enumerate_upsets(const FiniteLattice& l) {
  std::vector<ElementSet> out;
  ElementSet comparable(l.size());
  ElementSet upset(l.size());
  collect_antichains(l, 0, comparable, upset, out);
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

std::vector<FilterRecord> enumerate_filters(const FiniteLattice& l) {
  std::vector<FilterRecord> out;
  out.reserve(l.size());
  for (Element a = 0; a < l.size(); ++a) out.push_back(classify_filter(l, l.poset().up(a)));
  return out;
}

std::vector<FilterRecord> enumerate_prime_filters(const FiniteLattice& l) {
  std::vector<FilterRecord> out;
  for (auto& f : enumerate_filters(l)) {
    if (f.flags.is_prime) out.push_back(std::move(f));
  }
  return out;
}

IdealRecord complement_ideal(const FiniteLattice& l, const FilterRecord& filter) {
  if (!filter.flags.is_prime) throw NotPrime(0);
  return classify_ideal(l, ~filter.carrier);
}

DistinguishResult is_distinguishing(const FiniteLattice& l, std::span<const ElementSet> family) {
  const std::size_t n = l.size();
  std::vector<ElementSet> signature(n, ElementSet(family.size()));
  for (std::size_t k = 0; k < family.size(); ++k) {
    for_each_member(family[k], [&](Element e) { signature[e].set(k); });
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (signature[a] == signature[b]) return {false, std::make_pair(a, b)};
    }
  }
  return {};
}

DistinguishResult is_distinguishing(const FiniteLattice& l, std::span<const FilterRecord> family) {
  std::vector<ElementSet> sets;
  sets.reserve(family.size());
  for (const auto& f : family) sets.push_back(f.carrier);
  return is_distinguishing(l, sets);
}

UltrafilterReport ultrafilter_equivalences(const FiniteLattice& l) {
  if (!is_complemented(l) || !is_distributive(l)) throw NotBoolean();
  UltrafilterReport report;
  std::vector<ElementSet> primes;
  for (auto& f : enumerate_prime_filters(l)) {
    UltrafilterRow row;
    row.is_ultrafilter = f.flags.is_ultrafilter;
    row.is_principal = f.flags.is_principal;
    row.is_complete = f.flags.is_complete;
    row.is_completely_prime = f.flags.is_completely_prime;
    primes.push_back(f.carrier);
    row.filter = std::move(f);
    report.rows.push_back(std::move(row));
  }
  std::vector<ElementSet> ultras;
  for (const auto& f : enumerate_filters(l)) {
    if (f.flags.is_ultrafilter) ultras.push_back(f.carrier);
  }
  std::sort(primes.begin(), primes.end(), mask_less);
  std::sort(ultras.begin(), ultras.end(), mask_less);
  report.primes_are_ultrafilters = primes == ultras;
  report.flags_equivalent = std::all_of(report.rows.begin(), report.rows.end(), [](const UltrafilterRow& r) {
    return r.is_principal == r.is_complete && r.is_complete == r.is_completely_prime;
  });
  return report;
}

ElementSet product_filter(std::span<const FiniteLattice> factors, std::size_t coordinate,
                          const ElementSet& factor_filter) {
  const ProductIndex index(factors);
  ElementSet out(index.size());
  for (Element e = 0; e < index.size(); ++e) {
    if (factor_filter[index.coordinates(e)[coordinate]]) out.set(e);
  }
  return out;
}

std::optional<ElementSet> separating_product_filter(std::span<const FiniteLattice> factors, Element f, Element g) {
  const ProductIndex index(factors);
  const auto cf = index.coordinates(f);
  const auto cg = index.coordinates(g);
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (cf[j] == cg[j]) continue;
    for (const auto& gamma : enumerate_prime_filters(factors[j])) {
      if (gamma.carrier[cf[j]] != gamma.carrier[cg[j]]) return product_filter(factors, j, gamma.carrier);
    }
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace latrepr
