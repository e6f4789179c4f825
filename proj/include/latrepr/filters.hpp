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

#ifndef LATREPR_FILTERS_HPP_
#define LATREPR_FILTERS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "latrepr/core.hpp"

namespace latrepr {

struct FilterFlags {
  bool is_filter = false;
  bool is_proper = false;
  bool is_prime = false;
  bool is_complete = false;
  bool is_completely_prime = false;
  bool is_principal = false;
  bool is_ultrafilter = false;

  friend bool operator==(const FilterFlags&, const FilterFlags&) = default;
};

/// A subset of a finite lattice together with its classification.
struct FilterRecord {
  ElementSet carrier;
  FilterFlags flags;
  std::optional<Element> generator;  ///< set when principal
};

/// The order-dual notions for ideals. `is_maximal` is maximality among
/// proper ideals.
struct IdealFlags {
  bool is_ideal = false;
  bool is_proper = false;
  bool is_prime = false;
  bool is_complete = false;
  bool is_completely_prime = false;
  bool is_principal = false;
  bool is_maximal = false;

  friend bool operator==(const IdealFlags&, const IdealFlags&) = default;
};

struct IdealRecord {
  ElementSet carrier;
  IdealFlags flags;
  std::optional<Element> generator;
};

struct ClassifyOptions {
  /// Decide completeness and complete primality by enumerating subsets
  /// instead of the single finite-lattice check.
  bool paranoid = false;
  /// Subset enumeration limit for paranoid mode (carrier sizes above it throw).
  std::size_t cap = 20;
};

/// Flags follow the definitions: a filter is nonempty, upward closed and
/// closed under binary meets; prime filters are proper; complete means
/// ⋀T ∈ F for every T ⊆ F; completely prime means a prime filter meeting
/// every S with ⋁S ∈ F.
FilterRecord classify_filter(const FiniteLattice& lattice, const ElementSet& s, ClassifyOptions options = {});
IdealRecord classify_ideal(const FiniteLattice& lattice, const ElementSet& s, ClassifyOptions options = {});

FilterRecord principal_filter(const FiniteLattice& lattice, Element a);
IdealRecord principal_ideal(const FiniteLattice& lattice, Element a);

/// All up-closed sets, generated from antichains, sorted by bitmask value.
/// Exponential in the width; intended for small lattices.
std::vector<ElementSet> enumerate_upsets(const FiniteLattice& lattice);

/// All filters (proper or not), ordered by generator index. Generated from
/// antichains of size at most one: an antichain {a, b, ...} with two
/// incomparable members never generates a meet-closed upset, since a∧b
/// would have to lie above some member of the antichain.
std::vector<FilterRecord> enumerate_filters(const FiniteLattice& lattice);

/// Proper prime filters ordered by generator index.
std::vector<FilterRecord> enumerate_prime_filters(const FiniteLattice& lattice);

/// L \ F classified as an ideal. Throws NotPrime(0) unless F is a prime filter.
IdealRecord complement_ideal(const FiniteLattice& lattice, const FilterRecord& filter);

struct DistinguishResult {
  bool distinguishing = true;
  /// First pair (a < b in index order) that no member separates.
  std::optional<std::pair<Element, Element>> witness;
};

DistinguishResult is_distinguishing(const FiniteLattice& lattice, std::span<const ElementSet> family);
DistinguishResult is_distinguishing(const FiniteLattice& lattice, std::span<const FilterRecord> family);

struct UltrafilterRow {
  FilterRecord filter;
  bool is_ultrafilter = false;
  bool is_principal = false;
  bool is_complete = false;
  bool is_completely_prime = false;
};

struct UltrafilterReport {
  std::vector<UltrafilterRow> rows;  ///< one per prime filter
  /// Prime filters and maximal proper filters coincide as sets of sets.
  bool primes_are_ultrafilters = false;
  /// In every row, principal, complete and completely prime agree.
  bool flags_equivalent = false;
};

/// Throws NotBoolean unless the lattice is complemented and distributive.
UltrafilterReport ultrafilter_equivalences(const FiniteLattice& lattice);

/// Filter of a product lattice of the form ∏ S_i with S_j = `factor_filter`
/// and S_i the whole factor for i != j.
ElementSet product_filter(std::span<const FiniteLattice> factors, std::size_t coordinate,
                          const ElementSet& factor_filter);

/// For distinct product elements f, g: pick a coordinate where they differ
/// and a prime filter of that factor separating them, and lift it.
/// Returns nullopt when that factor has no separating prime filter.
std::optional<ElementSet> separating_product_filter(std::span<const FiniteLattice> factors, Element f, Element g);

}  // namespace latrepr

#endif  // LATREPR_FILTERS_HPP_
