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

#include <doctest.h>

#include "latrepr/filters.hpp"
#include "latrepr/generate.hpp"
#include "latrepr/modelcheck.hpp"
#include "oracle.hpp"

using namespace latrepr;

namespace {

// Brute-force predicate evaluation straight from the formulas, over index
// loops with no bitset shortcuts.

bool brute_P(const FiniteLattice& l, const ElementSet& s) {
  const auto n = static_cast<Element>(l.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (s[x] && l.leq(x, y) && !s[y]) return false;
      if (s[x] && s[y] && !s[l.meet(x, y)]) return false;
      if (s[l.join(x, y)] && !(s[x] || s[y])) return false;
    }
  }
  return true;
}

bool brute_I(const FiniteLattice& l, Element x, const ElementSet& s) {
  const auto n = static_cast<Element>(l.size());
  for (Element y = 0; y < n; ++y) {
    if (s[y] && !l.leq(x, y)) return false;
  }
  for (Element z = 0; z < n; ++z) {
    bool lower = true;
    for (Element y = 0; y < n; ++y) {
      if (s[y] && !l.leq(z, y)) lower = false;
    }
    if (lower && !l.leq(z, x)) return false;
  }
  return true;
}

bool brute_C(const TwoSortedStructure& m, std::size_t s) {
  for (const auto& t : m.ssort) {
    if (!t.is_subset_of(m.ssort[s])) continue;
    for (Element x = 0; x < m.lsort.size(); ++x) {
      if (brute_I(m.lsort, x, t) && !m.ssort[s][x]) return false;
    }
  }
  return true;
}

std::size_t index_of(const TwoSortedStructure& m, const ElementSet& s) {
  for (std::size_t i = 0; i < m.ssort.size(); ++i) {
    if (m.ssort[i] == s) return i;
  }
  FAIL("set missing from the S sort");
  return 0;
}

}  // namespace

TEST_CASE("predicates on the four-element Boolean algebra") {
  const auto ba = boolean_algebra(2);  // 0, a, b, 1 as bitmasks
  const auto m = canonical_model(ba);
  CHECK(m.ssort.size() == 16);
  const auto top = make_set(4, {3});
  const auto empty = ElementSet(4);
  const auto up_a = make_set(4, {1, 3});
  CHECK_FALSE(eval_P(m, index_of(m, top)));  // top = a ∨ b
  CHECK(eval_P(m, index_of(m, empty)));
  const auto c3 = canonical_model(chain(3));
  CHECK(eval_P(c3, index_of(c3, make_set(3, {2}))));
  CHECK(eval_P(m, index_of(m, up_a)));
  CHECK_FALSE(eval_P(m, index_of(m, make_set(4, {1, 2, 3}))));

  CHECK(eval_I(m, 3, index_of(m, empty)));
  CHECK_FALSE(eval_I(m, 0, index_of(m, empty)));
  CHECK(eval_I(m, 1, index_of(m, make_set(4, {1}))));
  CHECK(eval_I(m, 0, index_of(m, make_set(4, {1, 2}))));

  const TwoSortedStructure small{ba, {empty, up_a}};
  CHECK(eval_C(small, 1));
  CHECK_FALSE(eval_C(small, 0));  // the empty meet is top, which ∅ lacks
  CHECK(eval_C(m, index_of(m, full_set(4))));
  CHECK(eval_C(m, index_of(m, up_a)));
  CHECK_THROWS_AS(eval_P(m, 99), IndexOutOfRange);
  CHECK_THROWS_AS(m.member(7, 0), IndexOutOfRange);
}

TEST_CASE("predicates agree with literal evaluation") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& l : all_lattices(n)) {
      const auto m = canonical_model(l);
      for (std::size_t s = 0; s < m.ssort.size(); ++s) {
        CHECK(eval_P(m, s) == brute_P(l, m.ssort[s]));
        CHECK(eval_C(m, s) == brute_C(m, s));
        for (Element x = 0; x < l.size(); ++x) CHECK(eval_I(m, x, s) == brute_I(l, x, m.ssort[s]));
      }
    }
  }
}

TEST_CASE("C agrees with filter completeness on the canonical model") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& l : all_lattices(n)) {
      const auto m = canonical_model(l);
      for (std::size_t s = 0; s < m.ssort.size(); ++s) {
        const auto rec = classify_filter(l, m.ssort[s]);
        if (rec.flags.is_filter) CHECK(eval_C(m, s) == rec.flags.is_complete);
        // Off filters C says every subset's meet stays inside.
        bool closed = true;
        for (std::size_t t = 0; t < m.ssort.size(); ++t) {
          if (m.ssort[t].is_subset_of(m.ssort[s]) && !m.ssort[s][l.meet_of(m.ssort[t])]) closed = false;
        }
        CHECK(eval_C(m, s) == closed);
      }
    }
  }
}

TEST_CASE("canonical models of distributive lattices satisfy the theory") {
  for (const auto& l : all_distributive_lattices(10)) {
    const auto r = check_theory(canonical_model(l));
    CAPTURE(l.size());
    CHECK(r.ok());
    CHECK(r.verdict(Axiom::kIntersections).exhaustive);
    CHECK(reduct(canonical_model(l)) == l);
    // The P∧C sets are the prime filters plus the carrier; ∅ fails C.
    const auto primes = enumerate_prime_filters(l);
    CHECK(r.complete_prime_sets.size() == primes.size() + 1);
    CHECK(is_distinguishing(l, std::span<const ElementSet>(r.complete_prime_sets)).distinguishing);
  }
}

TEST_CASE("non-distributive lattices fail the lattice axiom and separation") {
  // A separating family of prime filters forces distributivity, so
  // separation fails alongside the lattice axiom.
  for (const auto& l : {m3(), n5()}) {
    const auto r = check_theory(canonical_model(l));
    CHECK_FALSE(r.verdict(Axiom::kLattice).holds);
    CHECK(r.verdict(Axiom::kLattice).elements.size() == 3);
    CHECK_FALSE(r.verdict(Axiom::kSeparation).holds);
    CHECK(r.verdict(Axiom::kStrictUpsets).holds);
    CHECK(r.verdict(Axiom::kIntersections).holds);
  }
  for (std::size_t n = 5; n <= 7; ++n) {
    for (const auto& l : all_lattices(n)) {
      const auto r = check_theory(canonical_model(l));
      CHECK(r.verdict(Axiom::kLattice).holds == is_distributive(l));
      CHECK(r.verdict(Axiom::kSeparation).holds == is_distributive(l));
      CHECK(r.ok() == is_distributive(l));
    }
  }
}

TEST_CASE("removing a uniquely separating filter breaks separation") {
  const auto ba = boolean_algebra(2);
  const auto up_a = make_set(4, {1, 3});
  const auto up_b = make_set(4, {2, 3});

  const auto closed = closed_model(ba, {up_b});
  const auto r = check_theory(closed);
  CHECK(r.verdict(Axiom::kStrictUpsets).holds);
  CHECK(r.verdict(Axiom::kIntersections).holds);
  CHECK_FALSE(r.verdict(Axiom::kSeparation).holds);
  CHECK(r.verdict(Axiom::kSeparation).elements == std::vector<Element>{0, 1});
  CHECK(check_theory(closed_model(ba, {up_a, up_b})).ok());

  for (const auto& l : all_distributive_lattices(8)) {
    if (l.size() < 2) continue;
    std::vector<ElementSet> primes;
    for (const auto& f : enumerate_prime_filters(l)) primes.push_back(f.carrier);
    for (std::size_t f = 0; f < primes.size(); ++f) {
      const auto pair = uniquely_separated_pair(l, primes, f);
      REQUIRE(pair);
      const auto broken = check_theory(without_set(canonical_model(l), primes[f]));
      const auto& sep = broken.verdict(Axiom::kSeparation);
      CHECK_FALSE(sep.holds);
      REQUIRE(sep.elements.size() == 2);
      // The reported pair is split by the removed filter and by no P∧C set left.
      CHECK(primes[f][sep.elements[0]] != primes[f][sep.elements[1]]);
      for (const auto& s : broken.complete_prime_sets) CHECK(s[sep.elements[0]] == s[sep.elements[1]]);
    }
  }
}

TEST_CASE("strict up-sets and intersections are checked extensionally") {
  const auto c3 = chain(3);
  TwoSortedStructure m{c3, {make_set(3, {1, 2}), make_set(3, {2}), ElementSet(3)}};
  CHECK(check_theory(m).ok());
  m.ssort.push_back(make_set(3, {2}));  // duplicate extension
  CHECK(check_theory(m).ok());
  m.ssort.erase(m.ssort.begin() + 1);
  CHECK(check_theory(m).ok());

  const TwoSortedStructure missing{c3, {make_set(3, {1, 2}), ElementSet(3)}};
  const auto r = check_theory(missing);
  CHECK_FALSE(r.verdict(Axiom::kStrictUpsets).holds);
  CHECK(r.verdict(Axiom::kStrictUpsets).elements == std::vector<Element>{1});

  const auto ba = boolean_algebra(2);
  const TwoSortedStructure open{ba, {make_set(4, {1, 3}), make_set(4, {2, 3})}};
  const auto q = check_theory(open);
  CHECK_FALSE(q.verdict(Axiom::kIntersections).holds);
  CHECK(q.verdict(Axiom::kIntersections).sets == std::vector<std::size_t>{0, 1});
}

TEST_CASE("sampling above the pair cap") {
  const auto l = boolean_algebra(3);
  auto m = canonical_model(l);
  m.ssort.erase(m.ssort.begin() + 1);  // the 2^n shortcut no longer applies
  TheoryOptions options;
  options.pair_cap = 100;
  options.samples = 5000;
  const auto r = check_theory(m, options);
  CHECK_FALSE(r.verdict(Axiom::kIntersections).exhaustive);
  CHECK_FALSE(r.verdict(Axiom::kIntersections).holds);  // {0} is missing and is hit quickly
}

TEST_CASE("canonical model cap") {
  CHECK_THROWS_AS(canonical_model(chain(17)), CarrierTooLarge);
  CHECK(canonical_model(chain(16)).ssort.size() == 65536);
  CHECK(reduct(TwoSortedStructure{m3(), {}}) == m3());
}
