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

#ifndef LATREPR_MODELCHECK_HPP_
#define LATREPR_MODELCHECK_HPP_

// Finite models of the two-sorted theory of lattices with sets of elements:
// an L sort (a finite lattice) and an S sort (indexed subsets of it).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "latrepr/core.hpp"

namespace latrepr {

struct TwoSortedStructure {
  FiniteLattice lsort;
  /// S-sort members by index; x ∈ s is ssort[s][x].
  std::vector<ElementSet> ssort;

  /// Throws IndexOutOfRange.
  bool member(Element x, std::size_t s) const;
};

/// Up-closed, meet-closed and join-prime, read literally (so ∅ and the
/// whole carrier qualify).
bool eval_P(const TwoSortedStructure& m, std::size_t s);
/// x is a lower bound of ssort[s] above every other lower bound. For ∅ this
/// forces x = top.
bool eval_I(const TwoSortedStructure& m, Element x, std::size_t s);
/// Every infimum of an S-sort subset t ⊆ s lies in s.
bool eval_C(const TwoSortedStructure& m, std::size_t s);

enum class Axiom { kLattice, kSeparation, kStrictUpsets, kIntersections };

std::string_view axiom_name(Axiom axiom);

struct AxiomVerdict {
  Axiom axiom = Axiom::kLattice;
  bool holds = true;
  /// kLattice: a distributivity triple; kSeparation: the unseparated pair;
  /// kStrictUpsets: the element x whose strict up-set is missing;
  /// kIntersections: empty (see sets).
  std::vector<Element> elements;
  /// kIntersections: the two S-sort indices whose intersection is missing.
  std::vector<std::size_t> sets;
  bool exhaustive = true;
  std::size_t checked = 0;
};

struct TheoryOptions {
  /// Intersection pairs checked exhaustively up to this many, sampled above.
  std::size_t pair_cap = std::size_t{1} << 22;
  std::size_t samples = 200000;
  std::uint64_t seed = 0;
};

struct TheoryReport {
  std::vector<AxiomVerdict> axioms;  ///< in Axiom order
  /// Distinct extensions of the S-sort members satisfying P and C.
  std::vector<ElementSet> complete_prime_sets;

  bool ok() const;
  const AxiomVerdict& verdict(Axiom axiom) const { return axioms.at(static_cast<std::size_t>(axiom)); }
};

TheoryReport check_theory(const TwoSortedStructure& m, const TheoryOptions& options = {});

inline constexpr std::size_t kCanonicalModelCap = 16;

/// (L, all subsets of L, ∈). Throws CarrierTooLarge above `cap` elements.
TwoSortedStructure canonical_model(const FiniteLattice& lattice, std::size_t cap = kCanonicalModelCap);

/// The strict up-sets {y : y > x} plus `extra`, closed under intersection.
TwoSortedStructure closed_model(const FiniteLattice& lattice, const std::vector<ElementSet>& extra);

/// Drops every S-sort member equal to `set`.
TwoSortedStructure without_set(const TwoSortedStructure& m, const ElementSet& set);

FiniteLattice reduct(const TwoSortedStructure& m);

/// A pair (x, y) with x ∈ f, y ∉ f that no other set in `family` separates.
std::optional<std::pair<Element, Element>> uniquely_separated_pair(const FiniteLattice& lattice,
                                                                   const std::vector<ElementSet>& family,
                                                                   std::size_t f);

}  // namespace latrepr

#endif  // LATREPR_MODELCHECK_HPP_
