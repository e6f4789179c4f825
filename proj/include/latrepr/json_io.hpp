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

#ifndef LATREPR_JSON_IO_HPP_
#define LATREPR_JSON_IO_HPP_

// JSON formats:
//   lattice        {"n": int, "covers": [[lower, upper], ...], "labels": [string, ...]?}
//   structure      {"lattice": <lattice>, "ssort": [[element, ...], ...]}
//   representation {"lattice": <lattice>, "base": [{"label", "filter"}], "images": [{"element", "mask"}]}
// A mask is a string of '0'/'1' whose i-th character is base point i.

#include <string>
#include <string_view>

#include <json.hpp>

#include "latrepr/core.hpp"
#include "latrepr/modelcheck.hpp"
#include "latrepr/representation.hpp"

namespace latrepr {

using Json = nlohmann::ordered_json;

/// Throws ParseError on malformed input, plus the core construction errors
/// (IndexOutOfRange, CycleDetected, NotALattice).
FiniteLattice lattice_from_json(const Json& j);
Json lattice_to_json(const FiniteLattice& lattice);

TwoSortedStructure structure_from_json(const Json& j);
Json structure_to_json(const TwoSortedStructure& m);

Representation representation_from_json(const Json& j);
Json representation_to_json(const Representation& h);

std::string mask_string(const ElementSet& s);
ElementSet parse_mask(std::string_view text);

/// Reads and parses a file; throws ParseError when unreadable or not JSON.
Json read_json_file(const std::string& path);

}  // namespace latrepr

#endif  // LATREPR_JSON_IO_HPP_
