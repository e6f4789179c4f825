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

#include <random>
#include <set>

#include "latrepr/generate.hpp"
#include "latrepr/irreducibles.hpp"
#include "oracle.hpp"

using namespace latrepr;

namespace {

std::set<int> to_set(const ElementSet& s) {
  std::set<int> out;
  for_each_member(s, [&](Element e) { out.insert(static_cast<int>(e)); });
  return out;
}

FiniteLattice grid_2x3() {
  const std::vector<FiniteLattice> f{chain(2), chain(3)};
  return direct_product(f);
}

}  // namespace

TEST_CASE("irreducibles on small lattices") {
  const auto c2 = irreducibles(chain(2));
  CHECK(to_set(c2.join_irr) == std::set<int>{1});
  CHECK(c2.completely_join_irr == c2.join_irr);
  CHECK_FALSE(c2.used_finite_shortcut);

  const auto ba = irreducibles(boolean_algebra(2));
  CHECK(to_set(ba.join_irr) == std::set<int>{1, 2});
  CHECK(to_set(ba.meet_irr) == std::set<int>{1, 2});

  const auto c4 = irreducibles(chain(4));
  CHECK(to_set(c4.join_irr) == std::set<int>{1, 2, 3});
  CHECK(to_set(c4.meet_irr) == std::set<int>{0, 1, 2});

  const auto m = irreducibles(m3());
  CHECK(to_set(m.join_irr) == std::set<int>{1, 2, 3});
}

TEST_CASE("irreducibles agree with the decomposition oracle") {
  std::vector<FiniteLattice> corpus;
  for (std::size_t n = 1; n <= 6; ++n)
    for (auto& l : all_lattices(n)) corpus.push_back(std::move(l));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) corpus.push_back(random_lattice(9, rng));
  for (const auto& l : corpus) {
    const auto r = irreducibles(l);
    const auto m = oracle::matrix_of(l);
    CHECK(to_set(r.join_irr) == oracle::join_irreducibles(m));
    CHECK(to_set(r.meet_irr) == oracle::join_irreducibles(oracle::transpose(m)));
    // Finite joins are all the joins there are.
    CHECK(r.completely_join_irr == r.join_irr);
    CHECK(r.completely_meet_irr == r.meet_irr);
    CHECK(is_join_dense(l, r.join_irr));
    CHECK(is_meet_dense(l, r.meet_irr));
  }
}

TEST_CASE("large lattices take the finite shortcut") {
  const auto r = irreducibles(boolean_algebra(5));
  CHECK(r.used_finite_shortcut);
  CHECK(r.join_irr.count() == 5);
  CHECK(r.completely_join_irr == r.join_irr);
}

TEST_CASE("density") {
  const auto ba = boolean_algebra(2);
  CHECK(is_join_dense(ba, full_set(4)));
  CHECK(is_join_dense(ba, make_set(4, {1, 2})));
  CHECK_FALSE(is_join_dense(ba, make_set(4, {1})));
  CHECK(is_meet_dense(ba, make_set(4, {1, 2})));
}

TEST_CASE("downset_lattice") {
  CHECK(are_isomorphic(downset_lattice(chain_poset(1)), chain(2)));
  CHECK(are_isomorphic(downset_lattice(antichain_poset(2)), boolean_algebra(2)));
  CHECK(are_isomorphic(downset_lattice(chain_poset(2)), chain(3)));

  const auto p = m3().poset();
  const auto ds = downsets(p);
  std::vector<ElementSet> expect;
  const auto m = oracle::matrix_of(m3());
  for (const auto& s : oracle::downsets(m)) {
    ElementSet e(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) e[i] = s[i];
    expect.push_back(e);
  }
  std::sort(expect.begin(), expect.end(), mask_less);
  CHECK(ds == expect);

  const auto l = downset_lattice(antichain_poset(3));
  CHECK(l.bottom() == 0);
  CHECK(l.top() == l.size() - 1);
  CHECK(is_distributive(l));
}

TEST_CASE("birkhoff_roundtrip") {
  const auto c2 = birkhoff_roundtrip(chain(2));
  CHECK(c2.join_irreducibles.size() == 1);
  const auto ba = birkhoff_roundtrip(boolean_algebra(2));
  CHECK(ba.downsets.size() == 4);
  CHECK_THROWS_AS(birkhoff_roundtrip(m3()), NotDistributive);
  // The downset construction applied to M3 lands in a lattice of the wrong size.
  CHECK(downset_lattice(antichain_poset(3)).size() == 8);

  for (const auto& l : all_distributive_lattices(8)) {
    const auto iso = birkhoff_roundtrip(l);
    CHECK(iso.downsets.size() == l.size());
    CHECK(iso.map[l.bottom()] == iso.downsets.bottom());
    CHECK(iso.map[l.top()] == iso.downsets.top());
    for (Element a = 0; a < l.size(); ++a)
      for (Element b = 0; b < l.size(); ++b) {
        CHECK(iso.map[l.meet(a, b)] == iso.downsets.meet(iso.map[a], iso.map[b]));
        CHECK(iso.map[l.join(a, b)] == iso.downsets.join(iso.map[a], iso.map[b]));
      }
  }
}

TEST_CASE("canonical_extension") {
  CHECK(are_isomorphic(canonical_extension(chain(2)), chain(2)));
  CHECK(are_isomorphic(canonical_extension(boolean_algebra(2)), boolean_algebra(2)));
  CHECK(are_isomorphic(canonical_extension(chain(3)), chain(3)));
  CHECK_THROWS_AS(canonical_extension(n5()), NotDistributive);
  for (const auto& l : all_distributive_lattices(8)) {
    CHECK(oracle::isomorphic(oracle::matrix_of(canonical_extension(l)), oracle::matrix_of(l)));
  }
}

TEST_CASE("is_doubly_algebraic") {
  CHECK(is_doubly_algebraic(chain(2)));
  CHECK_FALSE(is_doubly_algebraic(m3()));
  CHECK(is_doubly_algebraic(grid_2x3()));
  for (const auto& l : all_distributive_lattices(9)) CHECK(is_doubly_algebraic(l));
}
