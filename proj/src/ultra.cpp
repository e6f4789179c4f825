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

#include "latrepr/ultra.hpp"

#include <algorithm>
#include <set>

namespace latrepr {

namespace {

std::size_t int_pow(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

}  // namespace

UltrafilterOnFiniteIndex::UltrafilterOnFiniteIndex(std::size_t size, std::vector<ElementSet> members)
    : size_(size), members_(std::move(members)), kernel_(full_set(size)) {
  std::sort(members_.begin(), members_.end(), mask_less);
  for (const auto& a : members_) kernel_ &= a;
}

UltrafilterOnFiniteIndex UltrafilterOnFiniteIndex::principal(std::size_t index_size, std::size_t i0) {
  if (i0 >= index_size) throw IndexOutOfRange(i0, index_size);
  if (index_size > 20) throw CarrierTooLarge(index_size, 20);
  std::vector<ElementSet> members;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << index_size); ++mask) {
    if (mask >> i0 & 1U) members.emplace_back(index_size, mask);
  }
  return {index_size, std::move(members)};
}

UltrafilterOnFiniteIndex UltrafilterOnFiniteIndex::from_members(std::size_t index_size,
                                                                std::vector<ElementSet> members) {
  if (index_size == 0) throw Error("the index set must be nonempty");
  if (index_size > 20) throw CarrierTooLarge(index_size, 20);
  std::set<ElementSet> in;
  for (const auto& a : members) {
    if (a.size() != index_size) throw Error("member has the wrong index-set size");
    in.insert(a);
  }
  if (in.contains(ElementSet(index_size))) throw Error("not proper: contains the empty set");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << index_size); ++mask) {
    const ElementSet a(index_size, mask);
    ElementSet co = a;
    co.flip();
    if (in.contains(a) == in.contains(co)) throw Error("not an ultrafilter: neither or both of a set and its complement");
  }
  for (const auto& a : in) {
    for (const auto& b : in) {
      if (!in.contains(a & b)) throw Error("not closed under intersection");
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << index_size); ++mask) {
      const ElementSet c(index_size, mask);
      if (a.is_subset_of(c) && !in.contains(c)) throw Error("not upward closed");
    }
  }
  return {index_size, std::vector<ElementSet>(in.begin(), in.end())};
}

std::vector<UltrafilterOnFiniteIndex> UltrafilterOnFiniteIndex::enumerate(std::size_t index_size) {
  if (index_size == 0) throw Error("the index set must be nonempty");
  if (index_size > 4) throw CarrierTooLarge(index_size, 4);
  const std::size_t subsets = std::size_t{1} << index_size;
  std::vector<UltrafilterOnFiniteIndex> out;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << subsets); ++family) {
    std::vector<ElementSet> members;
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      if (family >> mask & 1U) members.emplace_back(index_size, mask);
    }
    try {
      out.push_back(from_members(index_size, std::move(members)));
    } catch (const CarrierTooLarge&) {
      throw;
    } catch (const Error&) {
    }
  }
  return out;
}

bool UltrafilterOnFiniteIndex::contains(const ElementSet& a) const {
  return std::binary_search(members_.begin(), members_.end(), a, mask_less);
}

std::optional<std::size_t> UltrafilterOnFiniteIndex::principal_point() const {
  if (kernel_.count() != 1) return std::nullopt;
  return kernel_.find_first();
}

// ---------------------------------------------------------------------------

Ultrapower::Ultrapower(FiniteLattice base, UltrafilterOnFiniteIndex u) : base_(std::move(base)), u_(std::move(u)) {
  for_each_member(u_.kernel(), [&](Element i) { kernel_points_.push_back(i); });
  const std::size_t n = base_.size();
  const std::size_t classes = int_pow(n, kernel_points_.size(), kClassCap);
  if (classes > kClassCap) throw CarrierTooLarge(classes, kClassCap);
  materialized_ = int_pow(n, u_.index_size(), kMaterializeCap) <= kMaterializeCap;

  // [x] ≤ [y] iff {i : x(i) ≤ y(i)} ∈ U.
  std::vector<Function> reps;
  reps.reserve(classes);
  for (std::size_t c = 0; c < classes; ++c) reps.push_back(representative(static_cast<Element>(c)));
  std::vector<ElementSet> up(classes, ElementSet(classes));
  for (std::size_t a = 0; a < classes; ++a) {
    for (std::size_t b = 0; b < classes; ++b) {
      ElementSet agree(u_.index_size());
      for (std::size_t i = 0; i < u_.index_size(); ++i) agree[i] = base_.leq(reps[a][i], reps[b][i]);
      if (u_.contains(agree)) up[a].set(b);
    }
  }
  quotient_ = FiniteLattice::from_poset(FinitePoset::from_order(std::move(up)));
}

Ultrapower::Function Ultrapower::representative(Element c) const {
  Function x(u_.index_size(), base_.bottom());
  std::size_t code = c;
  for (auto it = kernel_points_.rbegin(); it != kernel_points_.rend(); ++it) {
    x[*it] = static_cast<Element>(code % base_.size());
    code /= base_.size();
  }
  return x;
}

Element Ultrapower::class_of(const Function& x) const {
  if (x.size() != u_.index_size()) throw IndexOutOfRange(x.size(), u_.index_size());
  std::size_t code = 0;
  for (const std::size_t i : kernel_points_) {
    if (x[i] >= base_.size()) throw IndexOutOfRange(x[i], base_.size());
    code = code * base_.size() + x[i];
  }
  return static_cast<Element>(code);
}

bool Ultrapower::equivalent(const Function& x, const Function& y) const {
  ElementSet agree(u_.index_size());
  for (std::size_t i = 0; i < u_.index_size(); ++i) agree[i] = x.at(i) == y.at(i);
  return u_.contains(agree);
}

Element Ultrapower::bar(Element a) const {
  if (a >= base_.size()) throw IndexOutOfRange(a, base_.size());
  return class_of(Function(u_.index_size(), a));
}

std::size_t Ultrapower::function_count() const { return int_pow(base_.size(), u_.index_size(), kMaterializeCap); }

Ultrapower::Function Ultrapower::function_at(std::size_t code) const {
  Function x(u_.index_size());
  for (std::size_t i = u_.index_size(); i-- > 0;) {
    x[i] = static_cast<Element>(code % base_.size());
    code /= base_.size();
  }
  return x;
}

ElementSet Ultrapower::star_set(const ElementSet& s) const {
  if (s.size() != base_.size()) throw IndexOutOfRange(s.size(), base_.size());
  ElementSet out(quotient_.size());
  auto visit = [&](const Function& x) {
    ElementSet hits(u_.index_size());
    for (std::size_t i = 0; i < x.size(); ++i) hits[i] = s[x[i]];
    if (u_.contains(hits)) out.set(class_of(x));
  };
  if (materialized_) {
    for (std::size_t code = 0; code < function_count(); ++code) visit(function_at(code));
  } else {
    for (Element c = 0; c < quotient_.size(); ++c) visit(representative(c));
  }
  return out;
}

ElementSet Ultrapower::lower_star(const ElementSet& t) const {
  if (t.size() != quotient_.size()) throw IndexOutOfRange(t.size(), quotient_.size());
  ElementSet out(base_.size());
  for (Element a = 0; a < base_.size(); ++a) out[a] = t[bar(a)];
  return out;
}

std::vector<Element> Ultrapower::evaluation_map() const {
  const auto i0 = u_.principal_point();
  if (!i0) throw Error("evaluation needs a principal ultrafilter");
  std::vector<Element> out(quotient_.size());
  for (Element c = 0; c < quotient_.size(); ++c) out[c] = representative(c)[*i0];
  return out;
}

InfExistReport verify_inf_exist(const Ultrapower& power, const ElementSet& s) {
  InfExistReport r;
  r.star_meet = power.lattice().meet_of(power.star_set(s));
  r.bar_meet = power.bar(power.base().meet_of(s));
  r.holds = r.star_meet == r.bar_meet;
  return r;
}

DistRootReport verify_dist_root(const Ultrapower& power) {
  DistRootReport r;
  r.base_distributive = is_vee_bigmeet_distributive(power.base());
  r.power_distributive = is_vee_bigmeet_distributive(power.lattice());
  r.holds = r.base_distributive == r.power_distributive;
  return r;
}

bool evaluation_is_isomorphism(const Ultrapower& power) {
  const auto f = power.evaluation_map();
  const FiniteLattice& q = power.lattice();
  const FiniteLattice& l = power.base();
  if (q.size() != l.size()) return false;
  std::vector<bool> hit(l.size());
  for (Element c = 0; c < q.size(); ++c) {
    if (hit[f[c]]) return false;
    hit[f[c]] = true;
  }
  for (Element a = 0; a < q.size(); ++a) {
    for (Element b = 0; b < q.size(); ++b) {
      if (q.leq(a, b) != l.leq(f[a], f[b])) return false;
      if (f[q.meet(a, b)] != l.meet(f[a], f[b]) || f[q.join(a, b)] != l.join(f[a], f[b])) return false;
    }
  }
  return true;
}

}  // namespace latrepr
