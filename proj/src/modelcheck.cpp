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

#include "latrepr/modelcheck.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace latrepr {

namespace {

/// Lower bounds of s.
ElementSet lower_bounds(const FiniteLattice& l, const ElementSet& s) {
  ElementSet lb = full_set(l.size());
  for_each_member(s, [&](Element y) { lb &= l.poset().down(y); });
  return lb;
}

/// The unique x with I(x, s), if any.
std::optional<Element> infimum(const FiniteLattice& l, const ElementSet& s) {
  const ElementSet lb = lower_bounds(l, s);
  for (auto x = lb.find_first(); x != ElementSet::npos; x = lb.find_next(x)) {
    if (lb.is_subset_of(l.poset().down(static_cast<Element>(x)))) return static_cast<Element>(x);
  }
  return std::nullopt;
}

bool prime_clauses(const FiniteLattice& l, const ElementSet& s) {
  const auto n = static_cast<Element>(l.size());
  for (Element x = 0; x < n; ++x) {
    if (s[x] && !l.poset().up(x).is_subset_of(s)) return false;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (s[x] && s[y] && !s[l.meet(x, y)]) return false;
      if (s[l.join(x, y)] && !s[x] && !s[y]) return false;
    }
  }
  return true;
}

bool complete_clause(const TwoSortedStructure& m, std::size_t s, const std::vector<std::optional<Element>>& inf) {
  const ElementSet& target = m.ssort[s];
  for (std::size_t t = 0; t < m.ssort.size(); ++t) {
    if (m.ssort[t].is_subset_of(target) && inf[t] && !target[*inf[t]]) return false;
  }
  return true;
}

ElementSet strict_upset(const FiniteLattice& l, Element x) {
  ElementSet s = l.poset().up(x);
  s.reset(x);
  return s;
}

}  // namespace

bool TwoSortedStructure::member(Element x, std::size_t s) const {
  if (s >= ssort.size()) throw IndexOutOfRange(s, ssort.size());
  if (x >= lsort.size()) throw IndexOutOfRange(x, lsort.size());
  return ssort[s][x];
}

bool eval_P(const TwoSortedStructure& m, std::size_t s) {
  if (s >= m.ssort.size()) throw IndexOutOfRange(s, m.ssort.size());
  return prime_clauses(m.lsort, m.ssort[s]);
}

bool eval_I(const TwoSortedStructure& m, Element x, std::size_t s) {
  if (s >= m.ssort.size()) throw IndexOutOfRange(s, m.ssort.size());
  if (x >= m.lsort.size()) throw IndexOutOfRange(x, m.lsort.size());
  const ElementSet lb = lower_bounds(m.lsort, m.ssort[s]);
  return lb[x] && lb.is_subset_of(m.lsort.poset().down(x));
}

bool eval_C(const TwoSortedStructure& m, std::size_t s) {
  if (s >= m.ssort.size()) throw IndexOutOfRange(s, m.ssort.size());
  std::vector<std::optional<Element>> inf;
  inf.reserve(m.ssort.size());
  for (const auto& t : m.ssort) inf.push_back(infimum(m.lsort, t));
  return complete_clause(m, s, inf);
}

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::kLattice: return "distributive_lattice";
    case Axiom::kSeparation: return "separation";
    case Axiom::kStrictUpsets: return "strict_upsets";
    case Axiom::kIntersections: return "intersections";
  }
  return "unknown";
}

bool TheoryReport::ok() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomVerdict& v) { return v.holds; });
}

TheoryReport check_theory(const TwoSortedStructure& m, const TheoryOptions& options) {
  const FiniteLattice& l = m.lsort;
  const auto n = static_cast<Element>(l.size());
  TheoryReport report;

  AxiomVerdict lattice;
  lattice.axiom = Axiom::kLattice;
  lattice.checked = std::size_t{n} * n * n;
  if (auto t = distributivity_violation(l)) {
    lattice.holds = false;
    lattice.elements.assign(t->begin(), t->end());
  }
  report.axioms.push_back(lattice);

  // Distinct extensions, with the first index carrying each.
  std::set<ElementSet> distinct;
  std::vector<std::size_t> representatives;
  for (std::size_t s = 0; s < m.ssort.size(); ++s) {
    if (distinct.insert(m.ssort[s]).second) representatives.push_back(s);
  }

  AxiomVerdict separation;
  separation.axiom = Axiom::kSeparation;
  {
    std::vector<std::optional<Element>> inf;
    inf.reserve(m.ssort.size());
    for (const auto& t : m.ssort) inf.push_back(infimum(l, t));
    for (const std::size_t s : representatives) {
      if (prime_clauses(l, m.ssort[s]) && complete_clause(m, s, inf)) report.complete_prime_sets.push_back(m.ssort[s]);
    }
    for (Element x = 0; x < n && separation.holds; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        ++separation.checked;
        const bool split = std::any_of(report.complete_prime_sets.begin(), report.complete_prime_sets.end(),
                                       [&](const ElementSet& s) { return s[x] != s[y]; });
        if (!split) {
          separation.holds = false;
          separation.elements = {x, y};
          break;
        }
      }
    }
  }
  report.axioms.push_back(separation);

  AxiomVerdict upsets;
  upsets.axiom = Axiom::kStrictUpsets;
  for (Element x = 0; x < n; ++x) {
    ++upsets.checked;
    if (!distinct.contains(strict_upset(l, x))) {
      upsets.holds = false;
      upsets.elements = {x};
      break;
    }
  }
  report.axioms.push_back(upsets);

  AxiomVerdict meets;
  meets.axiom = Axiom::kIntersections;
  const std::size_t d = representatives.size();
  if (n < 64 && d == (std::size_t{1} << n)) {
    // Every subset is present, so every intersection is.
    meets.checked = d;
  } else if (d * d <= options.pair_cap) {
    for (std::size_t i = 0; i < d && meets.holds; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        ++meets.checked;
        if (!distinct.contains(m.ssort[representatives[i]] & m.ssort[representatives[j]])) {
          meets.holds = false;
          meets.sets = {representatives[i], representatives[j]};
          break;
        }
      }
    }
  } else {
    meets.exhaustive = false;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, d - 1);
    for (std::size_t k = 0; k < options.samples; ++k) {
      const std::size_t i = representatives[pick(rng)];
      const std::size_t j = representatives[pick(rng)];
      ++meets.checked;
      if (!distinct.contains(m.ssort[i] & m.ssort[j])) {
        meets.holds = false;
        meets.sets = {std::min(i, j), std::max(i, j)};
        break;
      }
    }
  }
  report.axioms.push_back(meets);
  return report;
}

TwoSortedStructure canonical_model(const FiniteLattice& lattice, std::size_t cap) {
  const std::size_t n = lattice.size();
  if (n > cap) throw CarrierTooLarge(n, cap);
  TwoSortedStructure m{lattice, {}};
  m.ssort.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) m.ssort.emplace_back(n, mask);
  return m;
}

TwoSortedStructure closed_model(const FiniteLattice& lattice, const std::vector<ElementSet>& extra) {
  std::set<ElementSet> sets(extra.begin(), extra.end());
  for (Element x = 0; x < lattice.size(); ++x) sets.insert(strict_upset(lattice, x));
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<ElementSet> current(sets.begin(), sets.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) grew |= sets.insert(current[i] & current[j]).second;
    }
  }
  std::vector<ElementSet> ordered(sets.begin(), sets.end());
  std::sort(ordered.begin(), ordered.end(), mask_less);
  return {lattice, std::move(ordered)};
}

TwoSortedStructure without_set(const TwoSortedStructure& m, const ElementSet& set) {
  TwoSortedStructure out{m.lsort, {}};
  std::copy_if(m.ssort.begin(), m.ssort.end(), std::back_inserter(out.ssort),
               [&](const ElementSet& s) { return s != set; });
  return out;
}

FiniteLattice reduct(const TwoSortedStructure& m) { return m.lsort; }

std::optional<std::pair<Element, Element>> uniquely_separated_pair(const FiniteLattice& lattice,
                                                                   const std::vector<ElementSet>& family,
                                                                   std::size_t f) {
  const auto n = static_cast<Element>(lattice.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!family[f][x] || family[f][y]) continue;
      bool alone = true;
      for (std::size_t g = 0; g < family.size() && alone; ++g) {
        if (g != f && family[g] != family[f] && family[g][x] != family[g][y]) alone = false;
      }
      if (alone) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

}  // namespace latrepr
