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

#include <cctype>
#include <set>

#include "latrepr/families.hpp"

namespace latrepr {

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Rational pow2_inverse(std::size_t k) {
  return Rational(boost::multiprecision::cpp_int(1), boost::multiprecision::cpp_int(1) << k);
}

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-') {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  const boost::multiprecision::cpp_int d(std::string{den});
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(boost::multiprecision::cpp_int(std::string{num}), d);
}

std::string format_rational(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational IrrationalCut::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool IrrationalCut::below(const Rational& x) const {
  if (x <= lo) return false;
  if (x >= hi) return true;
  // The root is the only sign change in (lo, hi) and is irrational, so eval(x) != 0.
  return sign(eval(x)) == sign(eval(hi));
}

std::pair<Rational, Rational> IrrationalCut::bracket(std::size_t k) const {
  Rational a = lo, b = hi;
  const int hi_sign = sign(eval(hi));
  for (std::size_t i = 0; i < k; ++i) {
    const Rational mid = (a + b) / 2;
    if (sign(eval(mid)) == hi_sign) b = mid;
    else a = mid;
  }
  return {a, b};
}

IrrationalCut cut_inverse_sqrt2() { return {"inv_sqrt2", {-1, 0, 2}, Rational(7, 10), Rational(71, 100)}; }
IrrationalCut cut_golden() { return {"golden", {-1, 1, 1}, Rational(61, 100), Rational(62, 100)}; }
IrrationalCut cut_sqrt2_minus_one() { return {"sqrt2_minus_1", {-1, 2, 1}, Rational(41, 100), Rational(42, 100)}; }

std::string UnitIntervalRationals::description() const {
  return "rationals in [0,1] under the usual order, exact arithmetic";
}

Rational UnitIntervalRationals::decode(std::string_view code) const {
  Rational q = parse_rational(code);
  if (q < 0 || q > 1) throw ParseError("rational outside [0,1]: '" + std::string(code) + "'");
  return q;
}

std::vector<Rational> UnitIntervalRationals::truncation_elements(std::size_t depth) const {
  std::set<Rational> out;
  for (std::size_t q = 1; q <= depth; ++q) {
    for (std::size_t p = 0; p <= q; ++p) out.insert(Rational(p, q));
  }
  return {out.begin(), out.end()};
}

namespace {

/// y + (1 − y)·2^−k for k = 1..len: strictly above y, descending to it.
std::vector<Rational> descending_to(const Rational& y, std::size_t len) {
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= len; ++k) out.push_back(y + (1 - y) * pow2_inverse(k));
  return out;
}

/// y − y·2^−k for k = 1..len: strictly below y, ascending to it.
std::vector<Rational> ascending_to(const Rational& y, std::size_t len) {
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= len; ++k) out.push_back(y - y * pow2_inverse(k));
  return out;
}

}  // namespace

std::vector<Probe<Rational>> UnitIntervalRationals::meet_probes(const FilterDescriptor<Rational>& d,
                                                                std::size_t budget) const {
  std::vector<Probe<Rational>> out;
  const auto pts = region();
  for (std::size_t i = 0; i < pts.size() && out.size() < budget; ++i) {
    const Rational& y = pts[i];
    if (!d.contains(y)) continue;
    if (y < 1) out.push_back({"descending to " + encode(y), descending_to(y, kChainLength), true, y});
    for (std::size_t j = i + 1; j < pts.size() && out.size() < budget; ++j) {
      out.push_back({"pair", {y, pts[j]}, false, y});
    }
  }
  return out;
}

std::vector<Probe<Rational>> UnitIntervalRationals::join_probes(const FilterDescriptor<Rational>& d,
                                                                std::size_t budget) const {
  std::vector<Probe<Rational>> out;
  const auto pts = region();
  for (std::size_t i = 0; i < pts.size() && out.size() < budget; ++i) {
    const Rational& y = pts[i];
    if (y > 0) out.push_back({"ascending to " + encode(y), ascending_to(y, kChainLength), true, y});
    for (std::size_t j = i + 1; j < pts.size() && out.size() < budget; ++j) {
      out.push_back({"pair", {y, pts[j]}, false, pts[j]});
    }
  }
  (void)d;
  return out;
}

FilterDescriptor<Rational> UnitIntervalRationals::principal(const Rational& x) {
  FilterDescriptor<Rational> d;
  d.name = "principal:" + format_rational(x);
  d.contains = [x](const Rational& a) { return a >= x; };
  d.parameters = {{"kind", "[x,1]"}, {"x", format_rational(x)}};
  d.claims = {
      {Flag::kPrime, true, "[x,1] is the up-set of a point of a chain"},
      {Flag::kComplete, true, "x is the least member, so any existing infimum of members is at least x"},
      {Flag::kCompletelyPrime, false, "x is the join of the elements strictly below it, none of which is a member"},
  };
  d.infimum = x;
  d.boundary_probes = [x](bool meets) {
    std::vector<Probe<Rational>> out;
    if (meets && x < 1) out.push_back({"descending to x", descending_to(x, kChainLength), true, x});
    if (!meets && x > 0) out.push_back({"ascending to x from below", ascending_to(x, kChainLength), true, x});
    return out;
  };
  return d;
}

FilterDescriptor<Rational> UnitIntervalRationals::half_open(const Rational& x) {
  FilterDescriptor<Rational> d;
  d.name = "halfopen:" + format_rational(x);
  d.contains = [x](const Rational& a) { return a > x; };
  d.parameters = {{"kind", "(x,1]"}, {"x", format_rational(x)}};
  d.claims = {
      {Flag::kPrime, true, "(x,1] is an up-set of a chain omitting 0"},
      {Flag::kComplete, false, "members descending to x have infimum x, which is not a member"},
      {Flag::kCompletelyPrime, true, "a join above x has a joinand above x"},
  };
  d.infimum = x;
  d.boundary_probes = [x](bool meets) {
    std::vector<Probe<Rational>> out;
    if (meets) out.push_back({"descending to x", descending_to(x, kChainLength), true, x});
    if (!meets && x > 0) out.push_back({"ascending to x from below", ascending_to(x, kChainLength), true, x});
    return out;
  };
  return d;
}

FilterDescriptor<Rational> UnitIntervalRationals::cut(const IrrationalCut& r) {
  FilterDescriptor<Rational> d;
  d.name = "cut:" + r.name;
  d.contains = [r](const Rational& a) { return r.below(a); };
  d.parameters = {{"kind", "{a : a > r}"},
                  {"r", r.name},
                  {"bracket", "(" + format_rational(r.lo) + "," + format_rational(r.hi) + ")"}};
  d.claims = {
      {Flag::kPrime, true, "an up-set of a chain omitting 0"},
      {Flag::kComplete, true, "members approaching r have no infimum among the rationals"},
      {Flag::kCompletelyPrime, true, "non-members approaching r have no supremum among the rationals"},
  };
  d.boundary_probes = [r](bool meets) {
    std::vector<Probe<Rational>> out;
    std::vector<Rational> chain;
    for (std::size_t k = 1; k <= kChainLength; ++k) {
      const auto [lo, hi] = r.bracket(k);
      chain.push_back(meets ? hi : lo);
    }
    out.push_back({meets ? "upper approximants of r" : "lower approximants of r", chain, true, std::nullopt});
    return out;
  };
  return d;
}

std::vector<FilterDescriptor<Rational>> UnitIntervalRationals::catalog() const {
  std::vector<FilterDescriptor<Rational>> out;
  for (const Rational& x : {Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1)}) out.push_back(principal(x));
  for (const Rational& x : {Rational(0), Rational(1, 3), Rational(1, 2)}) out.push_back(half_open(x));
  for (const auto& r : {cut_inverse_sqrt2(), cut_golden(), cut_sqrt2_minus_one()}) out.push_back(cut(r));
  return out;
}

UnitIntervalRationals unit_interval_rationals() { return {}; }

}  // namespace latrepr
