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

#include "latrepr/generate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "latrepr/irreducibles.hpp"

namespace latrepr {

FinitePoset chain_poset(std::size_t n) {
  std::vector<ElementSet> up(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) up[i].set(j);
  }
  return FinitePoset::from_order(std::move(up));
}

FinitePoset antichain_poset(std::size_t n) {
  std::vector<ElementSet> up(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  return FinitePoset::from_order(std::move(up));
}

FiniteLattice chain(std::size_t n) { return FiniteLattice::from_poset(chain_poset(n)); }

FiniteLattice boolean_algebra(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<ElementSet> up(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if ((a & ~b) == 0) up[a].set(b);
    }
  }
  return FiniteLattice::from_poset(FinitePoset::from_order(std::move(up)));
}

FiniteLattice m3() {
  const std::vector<std::pair<Element, Element>> covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  return FiniteLattice::from_poset(FinitePoset::from_hasse(5, covers, {"0", "a", "b", "c", "1"}));
}

FiniteLattice n5() {
  const std::vector<std::pair<Element, Element>> covers{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  return FiniteLattice::from_poset(FinitePoset::from_hasse(5, covers, {"0", "a", "b", "c", "1"}));
}

namespace {

// Bottom is 0, top is k+1, middles 1..k carry the strict order `middle_less`.
FinitePoset with_bounds(std::size_t k, const std::vector<std::vector<bool>>& middle_less) {
  const std::size_t n = k + 2;
  std::vector<ElementSet> up(n, ElementSet(n));
  up[0].set();
  up[n - 1].set(n - 1);
  for (std::size_t i = 0; i < k; ++i) {
    up[i + 1].set(i + 1);
    up[i + 1].set(n - 1);
    for (std::size_t j = 0; j < k; ++j) {
      if (middle_less[i][j]) up[i + 1].set(j + 1);
    }
  }
  return FinitePoset::from_order(std::move(up));
}

bool is_strict_order(const std::vector<std::vector<bool>>& r) {
  const std::size_t k = r.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!r[i][j]) continue;
      if (r[j][i]) return false;
      for (std::size_t m = 0; m < k; ++m) {
        if (r[j][m] && !r[i][m]) return false;
      }
    }
  }
  return true;
}

std::vector<std::size_t> order_signature(const FinitePoset& p) {
  std::vector<std::size_t> sig;
  for (Element e = 0; e < p.size(); ++e) sig.push_back(p.down(e).count() * 64 + p.up(e).count());
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace

std::vector<FiniteLattice> all_lattices(std::size_t n) {
  if (n == 0) return {};
  if (n <= 2) return {chain(n)};
  const std::size_t k = n - 2;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  std::map<std::vector<bool>, FiniteLattice> found;
  std::vector<std::vector<bool>> rel(k, std::vector<bool>(k));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    for (std::size_t p = 0; p < pairs.size(); ++p) rel[pairs[p].first][pairs[p].second] = (mask >> p) & 1U;
    if (!is_strict_order(rel)) continue;
    FinitePoset poset = with_bounds(k, rel);
    if (FiniteLattice::lattice_violation(poset)) continue;
    FiniteLattice lattice = FiniteLattice::from_poset(std::move(poset));
    auto form = canonical_form(lattice);
    found.try_emplace(std::move(form), std::move(lattice));
  }
  std::vector<FiniteLattice> out;
  for (auto& [form, lattice] : found) out.push_back(std::move(lattice));
  return out;
}

std::vector<FiniteLattice> all_distributive_lattices(std::size_t max_n) {
  std::vector<FiniteLattice> out;
  if (max_n == 0) return out;
  // Every poset arises from a smaller one by adding a maximal element whose
  // strict downset is a downset of the smaller poset.
  std::vector<FinitePoset> level{FinitePoset::from_order({})};
  while (!level.empty()) {
    std::vector<FinitePoset> next;
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
    for (const auto& p : level) {
      out.push_back(downset_lattice(p));
      const std::size_t k = p.size();
      for (const auto& d : downsets(p)) {
        std::vector<ElementSet> up(k + 1, ElementSet(k + 1));
        for (Element i = 0; i < k; ++i) {
          for_each_member(p.up(i), [&](Element j) { up[i].set(j); });
          if (d[i]) up[i].set(k);
        }
        up[k].set(k);
        FinitePoset q = FinitePoset::from_order(std::move(up));
        if (downsets(q).size() > max_n) continue;
        auto& bucket = buckets[order_signature(q)];
        const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                      [&](std::size_t idx) { return find_isomorphism(next[idx], q).has_value(); });
        if (seen) continue;
        bucket.push_back(next.size());
        next.push_back(std::move(q));
      }
    }
    level = std::move(next);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const FiniteLattice& a, const FiniteLattice& b) { return a.size() < b.size(); });
  return out;
}

FiniteLattice random_lattice(std::size_t max_n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size_dist(1, std::max<std::size_t>(1, max_n));
  const std::size_t n = size_dist(rng);
  if (n <= 2) return chain(n);
  const std::size_t k = n - 2;
  std::uniform_real_distribution<double> density(0.15, 0.7);
  for (;;) {
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::bernoulli_distribution edge(density(rng));
    std::vector<std::vector<bool>> rel(k, std::vector<bool>(k));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if (edge(rng)) rel[perm[a]][perm[b]] = true;
      }
    }
    for (std::size_t m = 0; m < k; ++m) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          if (rel[i][m] && rel[m][j]) rel[i][j] = true;
        }
      }
    }
    FinitePoset poset = with_bounds(k, rel);
    if (!FiniteLattice::lattice_violation(poset)) return FiniteLattice::from_poset(std::move(poset));
  }
}

}  // namespace latrepr
