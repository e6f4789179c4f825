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

#ifndef LATREPR_IRREDUCIBLES_HPP_
#define LATREPR_IRREDUCIBLES_HPP_

#include <cstddef>
#include <vector>

#include "latrepr/core.hpp"

namespace latrepr {

struct IrreducibleReport {
  ElementSet join_irr;
  ElementSet meet_irr;
  ElementSet completely_join_irr;
  ElementSet completely_meet_irr;
  /// True when the complete-irreducibility sets were taken from the finite
  /// identity J∞ = J rather than checked subset by subset.
  bool used_finite_shortcut = false;
};

/// Above this size complete irreducibility is not checked by subset enumeration.
inline constexpr std::size_t kDefinitionalIrreducibleCap = 20;

IrreducibleReport irreducibles(const FiniteLattice& lattice);

/// Every element is the join of some subset of `s` (the empty join being bottom).
bool is_join_dense(const FiniteLattice& lattice, const ElementSet& s);
bool is_meet_dense(const FiniteLattice& lattice, const ElementSet& s);

/// All down-closed subsets of `poset`, sorted by bitmask value.
std::vector<ElementSet> downsets(const FinitePoset& poset);

/// Downsets ordered by inclusion. Element i of the result is downsets(p)[i],
/// so bottom is index 0 (the empty set) and top is the last index.
FiniteLattice downset_lattice(const FinitePoset& poset);

/// Isomorphism L -> O(J(L)) given by x ↦ {j ∈ J(L) : j <= x}.
struct BirkhoffIsomorphism {
  FinitePoset join_irreducibles;       ///< J(L) with the induced order
  std::vector<Element> join_irr_index;  ///< position in L of each element of J(L)
  FiniteLattice downsets;               ///< O(J(L))
  std::vector<Element> map;             ///< map[x] = index in `downsets`
};

/// Throws NotDistributive when the precondition fails and IsomorphismFailure
/// if the map is not a lattice isomorphism.
BirkhoffIsomorphism birkhoff_roundtrip(const FiniteLattice& lattice);

/// Up-sets of the prime-filter space ordered by inclusion (indexed like
/// `downset_lattice` of the filters ordered by reverse inclusion). For a
/// finite distributive lattice this is isomorphic to the lattice itself.
/// Throws NotDistributive.
FiniteLattice canonical_extension(const FiniteLattice& lattice);

/// Distributive, with J∞ join-dense and M∞ meet-dense.
bool is_doubly_algebraic(const FiniteLattice& lattice);

}  // namespace latrepr

#endif  // LATREPR_IRREDUCIBLES_HPP_
