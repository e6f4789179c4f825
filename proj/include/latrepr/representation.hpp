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

#ifndef LATREPR_REPRESENTATION_HPP_
#define LATREPR_REPRESENTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latrepr/core.hpp"
#include "latrepr/filters.hpp"

namespace latrepr {

/// An embedding of a finite lattice into the powerset of a finite base.
/// Each base point is kept as the prime filter it came from, so the inverse
/// image of point x is literally `base()[x]`.
class Representation {
 public:
  Representation(FiniteLattice source, std::vector<ElementSet> base, std::vector<ElementSet> assign);

  const FiniteLattice& source() const { return source_; }
  /// base()[x] is a subset of the source carrier.
  const std::vector<ElementSet>& base() const { return base_; }
  std::size_t base_size() const { return base_.size(); }
  /// assign(a) is a subset of the base.
  const ElementSet& assign(Element a) const { return assign_[a]; }
  const std::vector<ElementSet>& images() const { return assign_; }

 private:
  FiniteLattice source_;
  std::vector<ElementSet> base_;
  std::vector<ElementSet> assign_;
};

/// h_K(a) = {f ∈ K : a ∈ f}. Throws NotPrime(index) or NotDistinguishing(a, b).
Representation represent_from(const FiniteLattice& lattice, std::span<const FilterRecord> filters);

/// Representation over all prime filters; throws NotRepresentable with a
/// non-distributive triple when the lattice is not distributive.
Representation represent(const FiniteLattice& lattice);

/// Result of checking the four structural invariants, with the first
/// offending elements where one fails.
struct InvariantReport {
  bool injective = true;
  bool preserves_meet = true;
  bool preserves_join = true;
  bool irredundant = true;
  bool preserves_bounds = true;
  std::optional<std::pair<Element, Element>> witness;
  bool ok() const { return injective && preserves_meet && preserves_join && irredundant && preserves_bounds; }
};

InvariantReport check_invariants(const Representation& h);

enum class VerifyMode { kExhaustive, kSampled };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::kExhaustive;
  /// Exhaustive mode refuses carriers above this size.
  std::size_t cap = 20;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
};

struct CompletenessVerdict {
  bool holds = true;
  std::optional<ElementSet> witness;  ///< subset S with h(⋀S) != ⋂h[S] (or the join analogue)
  bool exhaustive = true;
  std::size_t subsets_checked = 0;
};

/// h(⋀S) = ⋂ h[S] for every S ⊆ L (⋀∅ = top, ⋂∅ = base).
CompletenessVerdict verify_meet_complete(const Representation& h, VerifyOptions options = {});
/// h(⋁S) = ⋃ h[S] for every S ⊆ L (⋁∅ = bottom, ⋃∅ = ∅).
CompletenessVerdict verify_join_complete(const Representation& h, VerifyOptions options = {});

/// a ↦ X \ h(a) as a representation of the order dual. Base points become the
/// complementary prime ideals, which are the prime filters of the dual.
Representation dual_representation(const Representation& h);

/// {a : x ∈ h(a)} classified as a filter of the source.
FilterRecord inverse_image_filter(const Representation& h, std::size_t point);

}  // namespace latrepr

#endif  // LATREPR_REPRESENTATION_HPP_
