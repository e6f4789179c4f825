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

#ifndef LATREPR_ULTRA_HPP_
#define LATREPR_ULTRA_HPP_

// Ultrapowers of finite lattices over finite index sets. Every ultrafilter
// on a finite set is principal, so each ultrapower here is isomorphic to its
// base; only the principal direction of the ultraroot results can be run.

#include <cstddef>
#include <optional>
#include <vector>

#include "latrepr/core.hpp"

namespace latrepr {

class UltrafilterOnFiniteIndex {
 public:
  /// {A ⊆ I : i0 ∈ A}. Throws IndexOutOfRange.
  static UltrafilterOnFiniteIndex principal(std::size_t index_size, std::size_t i0);
  /// Validates up-closure, intersection closure, properness and the
  /// ultrafilter dichotomy; throws Error naming the failed condition.
  static UltrafilterOnFiniteIndex from_members(std::size_t index_size, std::vector<ElementSet> members);
  /// Every ultrafilter on an index set of the given size, by brute force over
  /// families of subsets. Throws CarrierTooLarge above 4.
  static std::vector<UltrafilterOnFiniteIndex> enumerate(std::size_t index_size);

  std::size_t index_size() const { return size_; }
  const std::vector<ElementSet>& members() const { return members_; }
  bool contains(const ElementSet& a) const;
  /// ⋂U, the least member.
  const ElementSet& kernel() const { return kernel_; }
  /// i0 when the kernel is a singleton.
  std::optional<std::size_t> principal_point() const;

 private:
  UltrafilterOnFiniteIndex(std::size_t size, std::vector<ElementSet> members);

  std::size_t size_ = 0;
  std::vector<ElementSet> members_;
  ElementSet kernel_;
};

/// Functions I → L modulo agreement on a member of U.
class Ultrapower {
 public:
  using Function = std::vector<Element>;

  static constexpr std::size_t kMaterializeCap = 1000000;
  /// Most classes the quotient order is built over.
  static constexpr std::size_t kClassCap = 4096;

  Ultrapower(FiniteLattice base, UltrafilterOnFiniteIndex u);

  const FiniteLattice& base() const { return base_; }
  const UltrafilterOnFiniteIndex& ultrafilter() const { return u_; }
  /// The quotient, one element per class.
  const FiniteLattice& lattice() const { return quotient_; }
  /// All |L|^|I| functions are enumerated for star_set when within the cap.
  bool materialized() const { return materialized_; }

  /// Class of a function. Throws IndexOutOfRange on a bad arity or value.
  Element class_of(const Function& x) const;
  /// A representative of a class (bottom off the kernel).
  Function representative(Element c) const;
  /// {i : x(i) = y(i)} ∈ U.
  bool equivalent(const Function& x, const Function& y) const;

  /// [ā], the class of the constant function.
  Element bar(Element a) const;
  /// S* = {[x] : {i : x(i) ∈ S} ∈ U}.
  ElementSet star_set(const ElementSet& s) const;
  /// T_* = {a : [ā] ∈ T}.
  ElementSet lower_star(const ElementSet& t) const;
  /// [x] ↦ x(i0) for principal U.
  std::vector<Element> evaluation_map() const;

 private:
  std::size_t function_count() const;
  Function function_at(std::size_t code) const;

  FiniteLattice base_;
  UltrafilterOnFiniteIndex u_;
  std::vector<std::size_t> kernel_points_;
  FiniteLattice quotient_;
  bool materialized_ = false;
};

struct InfExistReport {
  bool holds = false;
  Element star_meet = 0;  ///< ⋀(S*) in the ultrapower
  Element bar_meet = 0;   ///< [bar(⋀S)]
};

/// ⋀(S*) = [bar(⋀S)], the empty meet being top on both sides.
InfExistReport verify_inf_exist(const Ultrapower& power, const ElementSet& s);

struct DistRootReport {
  bool holds = false;  ///< the two flags agree
  bool base_distributive = false;
  bool power_distributive = false;
};

/// The ultrapower is ∨(⋀)-distributive exactly when the base is.
DistRootReport verify_dist_root(const Ultrapower& power);

/// The evaluation map is a lattice isomorphism onto the base.
bool evaluation_is_isomorphism(const Ultrapower& power);

}  // namespace latrepr

#endif  // LATREPR_ULTRA_HPP_
