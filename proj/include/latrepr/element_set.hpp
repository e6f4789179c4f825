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

#ifndef LATREPR_ELEMENT_SET_HPP_
#define LATREPR_ELEMENT_SET_HPP_

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace latrepr {

/// Index of an element in a finite carrier 0..n-1.
using Element = std::uint32_t;

/// A subset of a finite carrier, one bit per element.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

inline ElementSet make_set(std::size_t n, std::initializer_list<Element> members) {
  ElementSet s(n);
  for (Element e : members) s.set(e);
  return s;
}

inline ElementSet make_set(std::size_t n, std::span<const Element> members) {
  ElementSet s(n);
  for (Element e : members) s.set(e);
  return s;
}

inline ElementSet full_set(std::size_t n) {
  ElementSet s(n);
  s.set();
  return s;
}

/// Members in ascending index order.
inline std::vector<Element> members_of(const ElementSet& s) {
  std::vector<Element> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
    out.push_back(static_cast<Element>(i));
  }
  return out;
}

template <class F>
void for_each_member(const ElementSet& s, F&& f) {
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
    f(static_cast<Element>(i));
  }
}

/// Orders sets by the binary value of their bitmask (bit i has weight 2^i).
inline bool mask_less(const ElementSet& a, const ElementSet& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i];
  }
  return false;
}

/// "0110..." with character i describing element i.
inline std::string to_mask_string(const ElementSet& s) {
  std::string out(s.size(), '0');
  for_each_member(s, [&](Element e) { out[e] = '1'; });
  return out;
}

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::size_t h = s.size();
    std::vector<std::uint64_t> blocks;
    boost::to_block_range(s, std::back_inserter(blocks));
    for (auto b : blocks) h ^= std::hash<std::uint64_t>{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace latrepr

#endif  // LATREPR_ELEMENT_SET_HPP_
