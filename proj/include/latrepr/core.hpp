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

#ifndef LATREPR_CORE_HPP_
#define LATREPR_CORE_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latrepr/element_set.hpp"
#include "latrepr/errors.hpp"

namespace latrepr {

/// A finite partial order on 0..n-1. Row i of the order matrix is the set
/// of elements above i; the transposed rows are kept alongside.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Order is the reflexive-transitive closure of `covers` (pairs (lower, upper)).
  /// Throws IndexOutOfRange or CycleDetected.
  static FinitePoset from_hasse(std::size_t n, std::span<const std::pair<Element, Element>> covers,
                                std::vector<std::string> labels = {});

  /// `leq[i]` is the set {j : i <= j}. The relation must already be a partial order.
  static FinitePoset from_order(std::vector<ElementSet> leq, std::vector<std::string> labels = {});

  std::size_t size() const { return up_.size(); }
  bool leq(Element a, Element b) const { return up_[a][b]; }
  bool less(Element a, Element b) const { return a != b && up_[a][b]; }

  const ElementSet& up(Element a) const { return up_[a]; }
  const ElementSet& down(Element a) const { return down_[a]; }

  /// Covering pairs (a, b): a < b with nothing strictly between, sorted.
  std::vector<std::pair<Element, Element>> covers() const;

  /// The same order restricted to `keep`, reindexed in ascending order.
  FinitePoset induced(const ElementSet& keep) const;

  FinitePoset reversed() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Element e) const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) { return a.up_ == b.up_; }

 private:
  FinitePoset(std::vector<ElementSet> up, std::vector<std::string> labels);

  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<std::string> labels_;
};

/// A finite bounded lattice with precomputed meet and join tables.
/// Values are immutable after construction.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  /// Throws NotALattice naming the first pair (in row-major order) lacking a
  /// glb or lub.
  static FiniteLattice from_poset(FinitePoset poset);

  /// Returns the first pair lacking a glb or lub, or nullopt for a lattice.
  static std::optional<std::pair<Element, Element>> lattice_violation(const FinitePoset& poset);

  std::size_t size() const { return poset_.size(); }
  const FinitePoset& poset() const { return poset_; }

  bool leq(Element a, Element b) const { return poset_.leq(a, b); }
  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element join(Element a, Element b) const { return join_[a * size() + b]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  /// Meet of a set; the empty meet is top.
  Element meet_of(const ElementSet& s) const;
  /// Join of a set; the empty join is bottom.
  Element join_of(const ElementSet& s) const;

  std::string label(Element e) const { return poset_.label(e); }

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.poset_ == b.poset_ && a.meet_ == b.meet_ && a.join_ == b.join_;
  }

 private:
  friend FiniteLattice dual(const FiniteLattice& lattice);
  friend FiniteLattice direct_product(std::span<const FiniteLattice> factors);

  FinitePoset poset_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
};

inline FiniteLattice lattice_from_poset(FinitePoset p) { return FiniteLattice::from_poset(std::move(p)); }

FinitePoset poset_from_hasse(std::size_t n, std::span<const std::pair<Element, Element>> covers);

/// First triple (a,b,c) in lexicographic order with a∧(b∨c) != (a∧b)∨(a∧c).
std::optional<std::array<Element, 3>> distributivity_violation(const FiniteLattice& lattice);
bool is_distributive(const FiniteLattice& lattice);

/// Witness for a failure of a ∨ ⋀S = ⋀{a ∨ s : s ∈ S}.
struct BigMeetViolation {
  Element a;
  ElementSet subset;
};

/// Subsets are visited in ascending cardinality; the first failure is returned.
std::optional<BigMeetViolation> vee_bigmeet_violation(const FiniteLattice& lattice);
bool is_vee_bigmeet_distributive(const FiniteLattice& lattice);

/// Order dual: same indices, order reversed, meet and join swapped.
FiniteLattice dual(const FiniteLattice& lattice);

/// Cartesian product with coordinatewise operations. Element index is the
/// mixed-radix number of its coordinates, last factor fastest.
FiniteLattice direct_product(std::span<const FiniteLattice> factors);

/// Mixed-radix coding of product elements.
class ProductIndex {
 public:
  explicit ProductIndex(std::vector<std::size_t> radices);
  explicit ProductIndex(std::span<const FiniteLattice> factors);

  std::size_t size() const { return total_; }
  std::size_t arity() const { return radices_.size(); }
  std::vector<Element> coordinates(Element e) const;
  Element encode(std::span<const Element> coords) const;

 private:
  std::vector<std::size_t> radices_;
  std::size_t total_ = 1;
};

/// Complement of `a` if one exists.
std::optional<Element> complement_of(const FiniteLattice& lattice, Element a);
bool is_complemented(const FiniteLattice& lattice);

/// Minimal non-bottom elements.
ElementSet atoms(const FiniteLattice& lattice);
/// Every non-bottom element dominates an atom.
bool is_atomic(const FiniteLattice& lattice);

/// Order isomorphism A -> B (for lattices, a lattice isomorphism) found by
/// backtracking.
std::optional<std::vector<Element>> find_isomorphism(const FinitePoset& a, const FinitePoset& b);
std::optional<std::vector<Element>> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b);
bool are_isomorphic(const FiniteLattice& a, const FiniteLattice& b);

/// Lexicographically least order matrix over all relabelings. Brute force;
/// throws CarrierTooLarge above `kCanonicalFormCap` elements.
inline constexpr std::size_t kCanonicalFormCap = 8;
std::vector<bool> canonical_form(const FinitePoset& poset);
/// Same idea for lattices: bottom goes first, top last, and only the middle
/// elements are permuted, so the cap is two elements larger.
inline constexpr std::size_t kLatticeCanonicalFormCap = kCanonicalFormCap + 2;
std::vector<bool> canonical_form(const FiniteLattice& lattice);

}  // namespace latrepr

#endif  // LATREPR_CORE_HPP_
