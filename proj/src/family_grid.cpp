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

#include <algorithm>
#include <charconv>

#include "latrepr/families.hpp"

namespace latrepr {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("bad integer in '" + std::string(whole) + "'");
  }
  return v;
}

/// "(x,y)" with both coordinates non-positive.
std::pair<std::int64_t, std::int64_t> parse_pair(std::string_view code) {
  if (code.size() < 5 || code.front() != '(' || code.back() != ')') {
    throw ParseError("expected (x,y): '" + std::string(code) + "'");
  }
  const auto body = code.substr(1, code.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) throw ParseError("expected (x,y): '" + std::string(code) + "'");
  const auto x = parse_int(body.substr(0, comma), code);
  const auto y = parse_int(body.substr(comma + 1), code);
  if (x > 0 || y > 0) throw ParseError("grid coordinates must be non-positive: '" + std::string(code) + "'");
  return {x, y};
}

std::string format_pair(std::int64_t x, std::int64_t y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

/// Column c: (c, 0), (c, −1), (c, −2), ... and the transposed row.
template <class P, class Make>
std::vector<P> line(bool column, std::int64_t c, std::size_t len, Make make) {
  std::vector<P> out;
  for (std::size_t k = 0; k < len; ++k) {
    const auto t = -static_cast<std::int64_t>(k);
    out.push_back(column ? make(c, t) : make(t, c));
  }
  return out;
}

template <class P, class F>
void add_pairs(const F& family, const FilterDescriptor<P>& d, const std::vector<P>& pts, bool meets,
               std::size_t budget, std::vector<Probe<P>>& out) {
  for (std::size_t i = 0; i < pts.size() && out.size() < budget; ++i) {
    if (meets && !d.contains(pts[i])) continue;
    for (std::size_t j = i + 1; j < pts.size() && out.size() < budget; ++j) {
      if (meets && !d.contains(pts[j])) continue;
      const P bound = meets ? family.meet(pts[i], pts[j]) : family.join(pts[i], pts[j]);
      out.push_back({"pair", {pts[i], pts[j]}, false, bound});
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------

GridPoint grid_bottom() { return {true, 0, 0}; }
GridPoint grid_point(std::int64_t x, std::int64_t y) { return {false, x, y}; }

std::string NbarSquaredWithBottom::description() const {
  return "pairs of non-positive integers, coordinatewise, with an extra bottom";
}

bool NbarSquaredWithBottom::leq(const GridPoint& a, const GridPoint& b) const {
  if (a.is_bottom) return true;
  if (b.is_bottom) return false;
  return a.x <= b.x && a.y <= b.y;
}

GridPoint NbarSquaredWithBottom::meet(const GridPoint& a, const GridPoint& b) const {
  if (a.is_bottom || b.is_bottom) return grid_bottom();
  return grid_point(std::min(a.x, b.x), std::min(a.y, b.y));
}

GridPoint NbarSquaredWithBottom::join(const GridPoint& a, const GridPoint& b) const {
  if (a.is_bottom) return b;
  if (b.is_bottom) return a;
  return grid_point(std::max(a.x, b.x), std::max(a.y, b.y));
}

std::string NbarSquaredWithBottom::encode(const GridPoint& a) const {
  return a.is_bottom ? "bot" : format_pair(a.x, a.y);
}

GridPoint NbarSquaredWithBottom::decode(std::string_view code) const {
  if (code == "bot") return grid_bottom();
  const auto [x, y] = parse_pair(code);
  return grid_point(x, y);
}

std::vector<GridPoint> NbarSquaredWithBottom::truncation_elements(std::size_t depth) const {
  std::vector<GridPoint> out{grid_bottom()};
  const auto d = static_cast<std::int64_t>(depth);
  for (std::int64_t x = -(d - 1); x <= 0; ++x)
    for (std::int64_t y = -(d - 1); y <= 0; ++y) out.push_back(grid_point(x, y));
  return out;
}

std::vector<Probe<GridPoint>> NbarSquaredWithBottom::meet_probes(const FilterDescriptor<GridPoint>& d,
                                                                 std::size_t budget) const {
  std::vector<Probe<GridPoint>> out;
  for (std::int64_t c = 0; c > -static_cast<std::int64_t>(kRegionDepth) && out.size() < budget; --c) {
    for (const bool column : {true, false}) {
      auto pts = line<GridPoint>(column, c, kChainLength, grid_point);
      if (!detail::contains_all(d, pts)) continue;
      out.push_back({std::string(column ? "column " : "row ") + std::to_string(c) + " descending", std::move(pts),
                     true, grid_bottom()});
    }
  }
  add_pairs(*this, d, region(), true, budget, out);
  return out;
}

std::vector<Probe<GridPoint>> NbarSquaredWithBottom::join_probes(const FilterDescriptor<GridPoint>& d,
                                                                 std::size_t budget) const {
  std::vector<Probe<GridPoint>> out{{"empty set", {}, false, grid_bottom()}};
  for (std::int64_t c = 0; c > -static_cast<std::int64_t>(kRegionDepth) && out.size() < budget; --c) {
    out.push_back({"column " + std::to_string(c), line<GridPoint>(true, c, kChainLength, grid_point), true,
                   grid_point(c, 0)});
    out.push_back({"row " + std::to_string(c), line<GridPoint>(false, c, kChainLength, grid_point), true,
                   grid_point(0, c)});
  }
  add_pairs(*this, d, region(), false, budget, out);
  return out;
}

namespace {

std::vector<Claim> prime_not_complete() {
  return {
      {Flag::kPrime, true, "a join of pairs lies in the set exactly when one of the pair does"},
      {Flag::kComplete, false, "a descending line inside the set has only the bottom below it"},
      {Flag::kCompletelyPrime, true, "every nonempty bounded set of pairs attains its coordinatewise supremum"},
  };
}

}  // namespace

FilterDescriptor<GridPoint> NbarSquaredWithBottom::column_half_plane(std::int64_t n) {
  FilterDescriptor<GridPoint> d;
  d.name = "xge:" + std::to_string(-n);
  d.contains = [n](const GridPoint& a) { return !a.is_bottom && a.x >= -n; };
  d.parameters = {{"kind", "{(x,y) : x >= -n}"}, {"n", std::to_string(n)}};
  d.claims = prime_not_complete();
  return d;
}

FilterDescriptor<GridPoint> NbarSquaredWithBottom::row_half_plane(std::int64_t n) {
  FilterDescriptor<GridPoint> d;
  d.name = "yge:" + std::to_string(-n);
  d.contains = [n](const GridPoint& a) { return !a.is_bottom && a.y >= -n; };
  d.parameters = {{"kind", "{(x,y) : y >= -n}"}, {"n", std::to_string(n)}};
  d.claims = prime_not_complete();
  return d;
}

FilterDescriptor<GridPoint> NbarSquaredWithBottom::nonzero() {
  FilterDescriptor<GridPoint> d;
  d.name = "nonzero";
  d.contains = [](const GridPoint& a) { return !a.is_bottom; };
  d.parameters = {{"kind", "L \\ {0}"}};
  d.claims = prime_not_complete();
  return d;
}

std::vector<FilterDescriptor<GridPoint>> NbarSquaredWithBottom::catalog() const {
  std::vector<FilterDescriptor<GridPoint>> out;
  for (std::int64_t n = 0; n <= 2; ++n) out.push_back(column_half_plane(n));
  for (std::int64_t n = 0; n <= 2; ++n) out.push_back(row_half_plane(n));
  out.push_back(nonzero());
  return out;
}

NbarSquaredWithBottom nbar_squared_with_bottom() { return {}; }

// ---------------------------------------------------------------------------

StackPoint stack_nat(std::int64_t n) { return {true, n, 0, 0}; }
StackPoint stack_grid(std::int64_t x, std::int64_t y) { return {false, 0, x, y}; }

std::string NbarSquaredOverNats::description() const {
  return "pairs of non-positive integers, coordinatewise, above a copy of the naturals (0 is the bottom)";
}

bool NbarSquaredOverNats::leq(const StackPoint& a, const StackPoint& b) const {
  if (a.is_nat && b.is_nat) return a.n <= b.n;
  if (a.is_nat) return true;
  if (b.is_nat) return false;
  return a.x <= b.x && a.y <= b.y;
}

StackPoint NbarSquaredOverNats::meet(const StackPoint& a, const StackPoint& b) const {
  if (a.is_nat && b.is_nat) return a.n <= b.n ? a : b;
  if (a.is_nat) return a;
  if (b.is_nat) return b;
  return stack_grid(std::min(a.x, b.x), std::min(a.y, b.y));
}

StackPoint NbarSquaredOverNats::join(const StackPoint& a, const StackPoint& b) const {
  if (a.is_nat && b.is_nat) return a.n >= b.n ? a : b;
  if (a.is_nat) return b;
  if (b.is_nat) return a;
  return stack_grid(std::max(a.x, b.x), std::max(a.y, b.y));
}

std::string NbarSquaredOverNats::encode(const StackPoint& a) const {
  return a.is_nat ? "n" + std::to_string(a.n) : format_pair(a.x, a.y);
}

StackPoint NbarSquaredOverNats::decode(std::string_view code) const {
  if (!code.empty() && code.front() == 'n') {
    const auto n = parse_int(code.substr(1), code);
    if (n < 0) throw ParseError("naturals are non-negative: '" + std::string(code) + "'");
    return stack_nat(n);
  }
  const auto [x, y] = parse_pair(code);
  return stack_grid(x, y);
}

std::vector<StackPoint> NbarSquaredOverNats::truncation_elements(std::size_t depth) const {
  std::vector<StackPoint> out;
  const auto d = static_cast<std::int64_t>(depth);
  for (std::int64_t n = 0; n < d; ++n) out.push_back(stack_nat(n));
  for (std::int64_t x = -(d - 1); x <= 0; ++x)
    for (std::int64_t y = -(d - 1); y <= 0; ++y) out.push_back(stack_grid(x, y));
  return out;
}

std::vector<Probe<StackPoint>> NbarSquaredOverNats::meet_probes(const FilterDescriptor<StackPoint>& d,
                                                                std::size_t budget) const {
  std::vector<Probe<StackPoint>> out;
  for (std::int64_t c = 0; c > -static_cast<std::int64_t>(kRegionDepth) && out.size() < budget; --c) {
    for (const bool column : {true, false}) {
      auto pts = line<StackPoint>(column, c, kChainLength, stack_grid);
      if (!detail::contains_all(d, pts)) continue;
      // Only naturals lie below a whole line, and they have no greatest element.
      out.push_back({std::string(column ? "column " : "row ") + std::to_string(c) + " descending", std::move(pts),
                     true, std::nullopt});
    }
  }
  add_pairs(*this, d, region(), true, budget, out);
  return out;
}

std::vector<Probe<StackPoint>> NbarSquaredOverNats::join_probes(const FilterDescriptor<StackPoint>& d,
                                                                std::size_t budget) const {
  std::vector<Probe<StackPoint>> out{{"empty set", {}, false, stack_nat(0)}};
  for (std::int64_t m = 0; m < static_cast<std::int64_t>(kRegionDepth) && out.size() < budget; ++m) {
    std::vector<StackPoint> tail;
    for (std::size_t k = 0; k < kChainLength; ++k) tail.push_back(stack_nat(m + static_cast<std::int64_t>(k)));
    // The grid is the set of upper bounds of an infinite set of naturals; it has no least element.
    out.push_back({"naturals from " + std::to_string(m), std::move(tail), true, std::nullopt});
  }
  for (std::int64_t c = 0; c > -static_cast<std::int64_t>(kRegionDepth) && out.size() < budget; --c) {
    out.push_back({"column " + std::to_string(c), line<StackPoint>(true, c, kChainLength, stack_grid), true,
                   stack_grid(c, 0)});
    out.push_back({"row " + std::to_string(c), line<StackPoint>(false, c, kChainLength, stack_grid), true,
                   stack_grid(0, c)});
  }
  add_pairs(*this, d, region(), false, budget, out);
  return out;
}

namespace {

std::vector<Claim> strip_claims() {
  return {
      {Flag::kPrime, true, "a join of grid points lies in the strip exactly when one of them does"},
      {Flag::kComplete, true, "subsets of the strip either attain a coordinatewise minimum or have no infimum"},
      {Flag::kCompletelyPrime, true, "an existing supremum in the grid is attained coordinatewise by members"},
  };
}

}  // namespace

FilterDescriptor<StackPoint> NbarSquaredOverNats::column_strip(std::int64_t n) {
  FilterDescriptor<StackPoint> d;
  d.name = "xstrip:" + std::to_string(n);
  d.contains = [n](const StackPoint& a) { return !a.is_nat && a.x >= -n; };
  d.parameters = {{"kind", "[-n,0] x N"}, {"n", std::to_string(n)}};
  d.claims = strip_claims();
  return d;
}

FilterDescriptor<StackPoint> NbarSquaredOverNats::row_strip(std::int64_t n) {
  FilterDescriptor<StackPoint> d;
  d.name = "ystrip:" + std::to_string(n);
  d.contains = [n](const StackPoint& a) { return !a.is_nat && a.y >= -n; };
  d.parameters = {{"kind", "N x [-n,0]"}, {"n", std::to_string(n)}};
  d.claims = strip_claims();
  return d;
}

std::vector<FilterDescriptor<StackPoint>> NbarSquaredOverNats::catalog() const {
  std::vector<FilterDescriptor<StackPoint>> out;
  for (std::int64_t n = 0; n <= 2; ++n) out.push_back(column_strip(n));
  for (std::int64_t n = 0; n <= 2; ++n) out.push_back(row_strip(n));
  return out;
}

DensityVerdict NbarSquaredOverNats::refute_join_density(const StackPoint& target, std::size_t budget) const {
  if (target.is_nat) throw Error("density target must be a grid point");
  DensityVerdict v;
  v.target = encode(target);
  v.refuted = true;
  // Finite subsets of {0, ..., m}: their join is their maximum, a natural.
  const std::size_t half = std::max<std::size_t>(1, budget / 2);
  for (std::uint64_t mask = 0; v.finite_subsets_checked < half; ++mask) {
    StackPoint acc = bottom();
    for (std::uint64_t bits = mask, n = 0; bits != 0; bits >>= 1, ++n) {
      if (bits & 1U) acc = join(acc, stack_nat(static_cast<std::int64_t>(n)));
    }
    ++v.finite_subsets_checked;
    if (equal(acc, target)) {
      v.refuted = false;
      return v;
    }
  }
  // Infinite subsets: every grid point bounds them and each grid upper bound
  // has a strictly smaller one, so there is no least upper bound.
  for (const auto& u : region()) {
    if (v.upper_bounds_checked >= half) break;
    if (u.is_nat) continue;
    ++v.upper_bounds_checked;
    const StackPoint smaller = stack_grid(u.x - 1, u.y);
    const bool bounds_tail = !leq(u, stack_nat(kChainLength)) && leq(stack_nat(kChainLength), u);
    if (!bounds_tail || !leq(smaller, u) || equal(smaller, u)) {
      v.refuted = false;
      return v;
    }
  }
  v.witness_description = "finite subsets of N join to a natural; the upper bounds of an infinite subset are the "
                          "whole grid, where (x,y) always has (x-1,y) below it";
  return v;
}

NbarSquaredOverNats nbar_squared_over_nats() { return {}; }

}  // namespace latrepr
