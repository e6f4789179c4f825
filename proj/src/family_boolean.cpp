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
#include <iterator>

#include "latrepr/families.hpp"

namespace latrepr {

namespace {

using Set = std::vector<std::uint32_t>;

Set canonical(Set xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

Set set_union(const Set& a, const Set& b) {
  Set out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Set set_intersection(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Set set_difference(const Set& a, const Set& b) {
  Set out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Set range(std::uint32_t lo, std::uint32_t hi) {
  Set out;
  for (std::uint32_t i = lo; i < hi; ++i) out.push_back(i);
  return out;
}

Set bits_of(std::uint64_t mask) {
  Set out;
  for (std::uint32_t i = 0; mask != 0; mask >>= 1, ++i) {
    if (mask & 1U) out.push_back(i);
  }
  return out;
}

}  // namespace

FinCofin finite_set(std::vector<std::uint32_t> xs) { return {false, canonical(std::move(xs))}; }
FinCofin cofinite_set(std::vector<std::uint32_t> missing) { return {true, canonical(std::move(missing))}; }
FinCofin complement(const FinCofin& a) { return {!a.cofinite, a.listed}; }

bool member(const FinCofin& a, std::uint32_t n) {
  return std::binary_search(a.listed.begin(), a.listed.end(), n) != a.cofinite;
}

std::string FiniteCofiniteBA::description() const {
  return "finite and cofinite subsets of the naturals under inclusion";
}

bool FiniteCofiniteBA::leq(const FinCofin& a, const FinCofin& b) const {
  if (!a.cofinite && !b.cofinite) return std::includes(b.listed.begin(), b.listed.end(), a.listed.begin(), a.listed.end());
  if (!a.cofinite) return set_intersection(a.listed, b.listed).empty();
  if (!b.cofinite) return false;
  return std::includes(a.listed.begin(), a.listed.end(), b.listed.begin(), b.listed.end());
}

FinCofin FiniteCofiniteBA::meet(const FinCofin& a, const FinCofin& b) const {
  if (!a.cofinite && !b.cofinite) return {false, set_intersection(a.listed, b.listed)};
  if (!a.cofinite) return {false, set_difference(a.listed, b.listed)};
  if (!b.cofinite) return {false, set_difference(b.listed, a.listed)};
  return {true, set_union(a.listed, b.listed)};
}

FinCofin FiniteCofiniteBA::join(const FinCofin& a, const FinCofin& b) const {
  return complement(meet(complement(a), complement(b)));
}

std::string FiniteCofiniteBA::encode(const FinCofin& a) const {
  std::string out = a.cofinite ? "cof{" : "fin{";
  for (std::size_t i = 0; i < a.listed.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a.listed[i]);
  }
  return out + "}";
}

FinCofin FiniteCofiniteBA::decode(std::string_view code) const {
  const bool fin = code.starts_with("fin{");
  if ((!fin && !code.starts_with("cof{")) || !code.ends_with("}")) {
    throw ParseError("expected fin{...} or cof{...}: '" + std::string(code) + "'");
  }
  auto body = code.substr(4, code.size() - 5);
  Set xs;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto item = body.substr(0, comma);
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw ParseError("bad member in '" + std::string(code) + "'");
    }
    xs.push_back(v);
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
  }
  return fin ? finite_set(std::move(xs)) : cofinite_set(std::move(xs));
}

std::vector<FinCofin> FiniteCofiniteBA::truncation_elements(std::size_t depth) const {
  if (depth > 16) throw CarrierTooLarge(std::size_t{1} << std::min<std::size_t>(depth, 63), std::size_t{1} << 16);
  std::vector<FinCofin> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << depth); ++mask) out.push_back(finite_set(bits_of(mask)));
  return out;
}

std::vector<FinCofin> FiniteCofiniteBA::region() const {
  auto out = truncation_elements(kRegionDepth);
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) out.push_back(complement(out[i]));
  return out;
}

std::vector<Probe<FinCofin>> FiniteCofiniteBA::meet_probes(const FilterDescriptor<FinCofin>& d,
                                                           std::size_t budget) const {
  std::vector<Probe<FinCofin>> out;
  // N \ ({0..k−1} \ A) for k = 1, 2, ...: cofinite sets shrinking to A.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << kRegionDepth) && out.size() < budget; ++mask) {
    const Set keep = bits_of(mask);
    std::vector<FinCofin> chain;
    for (std::uint32_t k = 1; k <= kChainLength; ++k) chain.push_back(cofinite_set(set_difference(range(0, k), keep)));
    if (!detail::contains_all(d, chain)) continue;
    out.push_back({"cofinite sets shrinking to " + encode(finite_set(keep)), std::move(chain), true, finite_set(keep)});
  }
  const auto pts = region();
  for (std::size_t i = 0; i < pts.size() && out.size() < budget; ++i) {
    if (!d.contains(pts[i])) continue;
    for (std::size_t j = i + 1; j < pts.size() && out.size() < budget; ++j) {
      if (d.contains(pts[j])) out.push_back({"pair", {pts[i], pts[j]}, false, meet(pts[i], pts[j])});
    }
  }
  return out;
}

std::vector<Probe<FinCofin>> FiniteCofiniteBA::join_probes(const FilterDescriptor<FinCofin>& d,
                                                           std::size_t budget) const {
  std::vector<Probe<FinCofin>> out;
  // Singletons {m}, {m+1}, ...: their union N \ {0..m−1} is cofinite.
  for (std::uint32_t m = 0; m <= kRegionDepth && out.size() < budget; ++m) {
    std::vector<FinCofin> chain;
    for (std::uint32_t k = 0; k < kChainLength; ++k) chain.push_back(finite_set({m + k}));
    out.push_back({"singletons from " + std::to_string(m), std::move(chain), true, cofinite_set(range(0, m))});
  }
  const auto pts = region();
  for (std::size_t i = 0; i < pts.size() && out.size() < budget; ++i) {
    for (std::size_t j = i + 1; j < pts.size() && out.size() < budget; ++j) {
      out.push_back({"pair", {pts[i], pts[j]}, false, join(pts[i], pts[j])});
    }
  }
  (void)d;
  return out;
}

FilterDescriptor<FinCofin> FiniteCofiniteBA::principal_ultrafilter(std::uint32_t n) {
  FilterDescriptor<FinCofin> d;
  d.name = "point:" + std::to_string(n);
  d.contains = [n](const FinCofin& a) { return member(a, n); };
  d.parameters = {{"kind", "{A : n in A}"}, {"n", std::to_string(n)}};
  d.claims = {
      {Flag::kPrime, true, "an ultrafilter"},
      {Flag::kComplete, true, "generated by the atom {n}, which lies below every member"},
      {Flag::kCompletelyPrime, true, "a supremum containing n needs a joinand containing n"},
  };
  d.infimum = finite_set({n});
  return d;
}

FilterDescriptor<FinCofin> FiniteCofiniteBA::frechet() {
  FilterDescriptor<FinCofin> d;
  d.name = "frechet";
  d.contains = [](const FinCofin& a) { return a.cofinite; };
  d.parameters = {{"kind", "cofinite sets"}};
  d.claims = {
      {Flag::kPrime, true, "an ultrafilter: each set is finite or cofinite"},
      {Flag::kComplete, false, "the cofinite sets N \\ {0..k} have infimum the empty set"},
      {Flag::kCompletelyPrime, false, "the singletons are finite and join to N"},
  };
  d.infimum = finite_set({});
  return d;
}

std::vector<FilterDescriptor<FinCofin>> FiniteCofiniteBA::catalog() const {
  return {principal_ultrafilter(0), principal_ultrafilter(1), principal_ultrafilter(2), frechet()};
}

FiniteCofiniteBA finite_cofinite_ba() { return {}; }

// ---------------------------------------------------------------------------

IntervalSet make_interval_set(std::vector<std::pair<Rational, Rational>> pieces) {
  for (const auto& [lo, hi] : pieces) {
    if (lo < 0 || hi > 1 || !(lo < hi)) {
      throw MalformedInterval("interval [" + format_rational(lo) + "," + format_rational(hi) +
                              ") is empty or leaves [0,1)");
    }
  }
  std::sort(pieces.begin(), pieces.end());
  IntervalSet out;
  for (auto& piece : pieces) {
    if (!out.pieces.empty() && piece.first <= out.pieces.back().second) {
      if (piece.second > out.pieces.back().second) out.pieces.back().second = piece.second;
    } else {
      out.pieces.push_back(std::move(piece));
    }
  }
  return out;
}

IntervalSet complement(const IntervalSet& a) {
  IntervalSet out;
  Rational at = 0;
  for (const auto& [lo, hi] : a.pieces) {
    if (at < lo) out.pieces.emplace_back(at, lo);
    at = hi;
  }
  if (at < 1) out.pieces.emplace_back(at, Rational(1));
  return out;
}

bool member(const IntervalSet& a, const Rational& q) {
  return std::any_of(a.pieces.begin(), a.pieces.end(), [&](const auto& p) { return p.first <= q && q < p.second; });
}

std::string RationalIntervalBA::description() const {
  return "finite unions of half-open rational intervals in [0,1)";
}

IntervalSet RationalIntervalBA::top() const { return make_interval_set({{Rational(0), Rational(1)}}); }

IntervalSet RationalIntervalBA::meet(const IntervalSet& a, const IntervalSet& b) const {
  std::vector<std::pair<Rational, Rational>> pieces;
  for (const auto& [alo, ahi] : a.pieces) {
    for (const auto& [blo, bhi] : b.pieces) {
      const Rational lo = alo < blo ? blo : alo;
      const Rational hi = ahi < bhi ? ahi : bhi;
      if (lo < hi) pieces.emplace_back(lo, hi);
    }
  }
  return make_interval_set(std::move(pieces));
}

IntervalSet RationalIntervalBA::join(const IntervalSet& a, const IntervalSet& b) const {
  auto pieces = a.pieces;
  pieces.insert(pieces.end(), b.pieces.begin(), b.pieces.end());
  return make_interval_set(std::move(pieces));
}

bool RationalIntervalBA::leq(const IntervalSet& a, const IntervalSet& b) const { return meet(a, b) == a; }

std::string RationalIntervalBA::encode(const IntervalSet& a) const {
  if (a.pieces.empty()) return "empty";
  std::string out;
  for (const auto& [lo, hi] : a.pieces) {
    if (!out.empty()) out += "+";
    out += "[" + format_rational(lo) + "," + format_rational(hi) + ")";
  }
  return out;
}

IntervalSet RationalIntervalBA::decode(std::string_view code) const {
  if (code == "empty") return {};
  std::vector<std::pair<Rational, Rational>> pieces;
  while (!code.empty()) {
    const auto plus = code.find('+');
    const auto item = code.substr(0, plus);
    const auto comma = item.find(',');
    if (item.size() < 5 || item.front() != '[' || item.back() != ')' || comma == std::string_view::npos) {
      throw ParseError("expected [lo,hi): '" + std::string(item) + "'");
    }
    pieces.emplace_back(parse_rational(item.substr(1, comma - 1)),
                        parse_rational(item.substr(comma + 1, item.size() - comma - 2)));
    code = plus == std::string_view::npos ? std::string_view{} : code.substr(plus + 1);
  }
  return make_interval_set(std::move(pieces));
}

std::vector<IntervalSet> RationalIntervalBA::truncation_elements(std::size_t depth) const {
  if (depth > 16) throw CarrierTooLarge(std::size_t{1} << std::min<std::size_t>(depth, 63), std::size_t{1} << 16);
  std::vector<IntervalSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << depth); ++mask) {
    std::vector<std::pair<Rational, Rational>> cells;
    for (const auto i : bits_of(mask)) cells.emplace_back(Rational(i, depth), Rational(i + 1, depth));
    out.push_back(make_interval_set(std::move(cells)));
  }
  return out;
}

namespace {

Rational half_power(std::size_t k) {
  return Rational(boost::multiprecision::cpp_int(1), boost::multiprecision::cpp_int(1) << k);
}

/// [q, q + (1−q)·2^−k) for k = 1..len.
std::vector<IntervalSet> shrinking_at(const Rational& q, std::size_t len) {
  std::vector<IntervalSet> out;
  for (std::size_t k = 1; k <= len; ++k) out.push_back(make_interval_set({{q, q + (1 - q) * half_power(k)}}));
  return out;
}

/// [0,1) with a gap around q shrinking to the single point q.
std::vector<IntervalSet> punctured_at(const Rational& q, std::size_t len) {
  std::vector<IntervalSet> out;
  for (std::size_t k = 1; k <= len; ++k) {
    std::vector<std::pair<Rational, Rational>> pieces;
    if (q > 0) pieces.emplace_back(Rational(0), q - q * half_power(k));
    pieces.emplace_back(q + (1 - q) * half_power(k), Rational(1));
    out.push_back(make_interval_set(std::move(pieces)));
  }
  return out;
}

}  // namespace

std::vector<Probe<IntervalSet>> RationalIntervalBA::meet_probes(const FilterDescriptor<IntervalSet>& d,
                                                                std::size_t budget) const {
  std::vector<Probe<IntervalSet>> out;
  for (std::size_t i = 0; i < kRegionDepth && out.size() < budget; ++i) {
    const Rational p(i, kRegionDepth);
    auto chain = shrinking_at(p, kChainLength);
    if (!detail::contains_all(d, chain)) continue;
    out.push_back({"intervals shrinking to " + format_rational(p), std::move(chain), true, bottom()});
  }
  const auto pts = region();
  for (std::size_t i = 0; i < pts.size() && out.size() < budget; ++i) {
    if (!d.contains(pts[i])) continue;
    for (std::size_t j = i + 1; j < pts.size() && out.size() < budget; ++j) {
      if (d.contains(pts[j])) out.push_back({"pair", {pts[i], pts[j]}, false, meet(pts[i], pts[j])});
    }
  }
  return out;
}

std::vector<Probe<IntervalSet>> RationalIntervalBA::join_probes(const FilterDescriptor<IntervalSet>& d,
                                                                std::size_t budget) const {
  std::vector<Probe<IntervalSet>> out;
  for (std::size_t i = 0; i < kRegionDepth && out.size() < budget; ++i) {
    const Rational p(i, kRegionDepth);
    out.push_back({"gaps shrinking to " + format_rational(p), punctured_at(p, kChainLength), true, top()});
  }
  const auto pts = region();
  for (std::size_t i = 0; i < pts.size() && out.size() < budget; ++i) {
    for (std::size_t j = i + 1; j < pts.size() && out.size() < budget; ++j) {
      out.push_back({"pair", {pts[i], pts[j]}, false, join(pts[i], pts[j])});
    }
  }
  (void)d;
  return out;
}

FilterDescriptor<IntervalSet> RationalIntervalBA::point_ultrafilter(const Rational& q) {
  FilterDescriptor<IntervalSet> d;
  d.name = "point:" + format_rational(q);
  d.contains = [q](const IntervalSet& a) { return member(a, q); };
  d.parameters = {{"kind", "{A : q in A}"}, {"q", format_rational(q)}};
  d.claims = {
      {Flag::kPrime, true, "an ultrafilter: q lies in A or in its complement"},
      {Flag::kComplete, false, "no atoms: intervals [q, q+e) shrink to a meet of 0"},
      {Flag::kCompletelyPrime, false, "no atoms: sets avoiding q join to [0,1)"},
  };
  d.boundary_probes = [q](bool meets) {
    std::vector<Probe<IntervalSet>> out;
    if (meets) out.push_back({"intervals shrinking to q", shrinking_at(q, kChainLength), true, IntervalSet{}});
    else out.push_back({"gaps shrinking to q", punctured_at(q, kChainLength), true,
                        make_interval_set({{Rational(0), Rational(1)}})});
    return out;
  };
  return d;
}

std::vector<FilterDescriptor<IntervalSet>> RationalIntervalBA::catalog() const {
  return {point_ultrafilter(Rational(0)), point_ultrafilter(Rational(1, 3)), point_ultrafilter(Rational(1, 2))};
}

RationalIntervalBA rational_interval_ba() { return {}; }

}  // namespace latrepr
