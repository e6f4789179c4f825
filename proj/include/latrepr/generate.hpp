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

#ifndef LATREPR_GENERATE_HPP_
#define LATREPR_GENERATE_HPP_

#include <cstddef>
#include <random>
#include <vector>

#include "latrepr/core.hpp"

namespace latrepr {

/// 0 < 1 < ... < n-1.
FiniteLattice chain(std::size_t n);
/// Subsets of a k-set; element index is the bitmask, so atoms are powers of two.
FiniteLattice boolean_algebra(std::size_t k);
/// Diamond: 0 bottom, 1..3 pairwise incomparable, 4 top.
FiniteLattice m3();
/// Pentagon: 0 < 1 < 2 < 4 and 0 < 3 < 4.
FiniteLattice n5();

FinitePoset chain_poset(std::size_t n);
FinitePoset antichain_poset(std::size_t n);

/// Every lattice with exactly n elements, one per isomorphism class, ordered
/// by canonical form. Practical up to n = 7.
std::vector<FiniteLattice> all_lattices(std::size_t n);

/// Every distributive lattice with at most `max_n` elements up to isomorphism,
/// built as downset lattices of posets (smallest first).
std::vector<FiniteLattice> all_distributive_lattices(std::size_t max_n);

/// A random lattice with between 1 and max_n elements: random order on the
/// middle elements plus bounds, retried until it is a lattice.
FiniteLattice random_lattice(std::size_t max_n, std::mt19937_64& rng);

}  // namespace latrepr

#endif  // LATREPR_GENERATE_HPP_
