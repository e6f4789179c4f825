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

#ifndef LATREPR_ORACLE_LATTICE_HPP_
#define LATREPR_ORACLE_LATTICE_HPP_

// Countable lattices given by decision procedures, and bounded probing of
// filter classifications on them.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latrepr/core.hpp"
#include "latrepr/errors.hpp"

namespace latrepr {

enum class Flag { kFilter, kPrime, kComplete, kCompletelyPrime };

std::string_view flag_name(Flag flag);

/// Expected value of one flag, with the reason it is expected.
struct Claim {
  Flag flag;
  bool expected;
  std::string citation;
};

template <class E>
struct Probe;

template <class E>
struct FilterDescriptor {
  std::string name;
  std::function<bool(const E&)> contains;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Claim> claims;
  /// ⋀F in the family, when it exists.
  std::optional<E> infimum;
  /// Chains approaching this filter's boundary, tried before the family's
  /// general generator. Argument: true for subsets of the filter (meets),
  /// false for subsets of its complement (joins).
  std::function<std::vector<Probe<E>>(bool)> boundary_probes;
};

/// One candidate subset: a finite prefix of a (possibly infinite) structured
/// set, plus its exact infimum or supremum as known to the family.
template <class E>
struct Probe {
  std::string description;
  std::vector<E> prefix;
  bool infinite = false;
  std::optional<E> bound;
};

enum class ProbeStatus { kVerified, kRefuted };

struct ProbeVerdict {
  Flag flag = Flag::kFilter;
  bool claimed = true;
  ProbeStatus status = ProbeStatus::kVerified;
  std::size_t budget = 0;
  std::size_t instances_checked = 0;
  /// Encoded prefix of the refuting subset (or the refuting pair for primality).
  std::vector<std::string> witness;
  std::string witness_description;
  std::optional<std::string> bound;

  /// Verified and claimed true, or refuted and claimed false.
  bool matches() const { return claimed == (status == ProbeStatus::kVerified); }
};

inline constexpr std::size_t kDefaultBudget = 1000;

template <class E>
class OracleLattice {
 public:
  using element_type = E;
  virtual ~OracleLattice() = default;

  virtual std::string id() const = 0;
  virtual std::string description() const = 0;

  virtual bool leq(const E& a, const E& b) const = 0;
  virtual E meet(const E& a, const E& b) const = 0;
  virtual E join(const E& a, const E& b) const = 0;
  virtual E bottom() const = 0;
  virtual E top() const = 0;

  virtual std::string encode(const E& a) const = 0;
  /// Throws ParseError.
  virtual E decode(std::string_view code) const = 0;

  /// Carrier of truncate(depth), in a fixed order.
  virtual std::vector<E> truncation_elements(std::size_t depth) const = 0;

  /// Finite region used for sampling pairs and for confirming refutations.
  virtual std::vector<E> region() const = 0;

  /// Subsets of the descriptor's carrier, for refuting completeness.
  virtual std::vector<Probe<E>> meet_probes(const FilterDescriptor<E>& d, std::size_t budget) const = 0;
  /// Subsets of the complement, for refuting complete primality.
  virtual std::vector<Probe<E>> join_probes(const FilterDescriptor<E>& d, std::size_t budget) const = 0;

  virtual std::vector<FilterDescriptor<E>> catalog() const = 0;

  bool equal(const E& a, const E& b) const { return leq(a, b) && leq(b, a); }

  /// The finite restriction, re-bounded at its own extrema. Labels are codes.
  FiniteLattice truncate(std::size_t depth) const {
    if (depth == 0) throw Error("truncation depth must be positive");
    const auto elems = truncation_elements(depth);
    const std::size_t n = elems.size();
    std::vector<ElementSet> up(n, ElementSet(n));
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(encode(elems[i]));
      for (std::size_t j = 0; j < n; ++j) {
        if (leq(elems[i], elems[j])) up[i].set(j);
      }
    }
    return FiniteLattice::from_poset(FinitePoset::from_order(std::move(up), std::move(labels)));
  }
};

namespace detail {

template <class E>
bool contains_any(const FilterDescriptor<E>& d, const std::vector<E>& xs) {
  return std::any_of(xs.begin(), xs.end(), [&](const E& x) { return d.contains(x); });
}

template <class E>
bool contains_all(const FilterDescriptor<E>& d, const std::vector<E>& xs) {
  return std::all_of(xs.begin(), xs.end(), [&](const E& x) { return d.contains(x); });
}

template <class E>
std::vector<std::string> encode_all(const OracleLattice<E>& f, const std::vector<E>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(f.encode(x));
  return out;
}

template <class E>
void refute(ProbeVerdict& v, const OracleLattice<E>& f, const Probe<E>& p) {
  v.status = ProbeStatus::kRefuted;
  v.witness = encode_all(f, p.prefix);
  v.witness_description = p.description;
  if (p.bound) v.bound = f.encode(*p.bound);
}

template <class E>
ProbeVerdict probe_filter_axioms(const OracleLattice<E>& f, const FilterDescriptor<E>& d, std::size_t budget) {
  ProbeVerdict v;
  v.flag = Flag::kFilter;
  v.budget = budget;
  if (!d.contains(f.top()) || d.contains(f.bottom())) {
    v.status = ProbeStatus::kRefuted;
    v.witness = {f.encode(d.contains(f.top()) ? f.bottom() : f.top())};
    v.witness_description = "bound membership";
    return v;
  }
  const auto region = f.region();
  for (const auto& a : region) {
    if (!d.contains(a)) continue;
    for (const auto& b : region) {
      if (v.instances_checked >= budget) return v;
      ++v.instances_checked;
      const bool up_fails = f.leq(a, b) && !d.contains(b);
      const bool meet_fails = d.contains(b) && !d.contains(f.meet(a, b));
      if (up_fails || meet_fails) {
        v.status = ProbeStatus::kRefuted;
        v.witness = {f.encode(a), f.encode(b)};
        v.witness_description = up_fails ? "not upward closed" : "not closed under meets";
        return v;
      }
    }
  }
  return v;
}

template <class E>
ProbeVerdict probe_prime(const OracleLattice<E>& f, const FilterDescriptor<E>& d, std::size_t budget) {
  ProbeVerdict v;
  v.flag = Flag::kPrime;
  v.budget = budget;
  const auto region = f.region();
  for (std::size_t i = 0; i < region.size(); ++i) {
    for (std::size_t j = i; j < region.size(); ++j) {
      if (v.instances_checked >= budget) return v;
      ++v.instances_checked;
      const auto& a = region[i];
      const auto& b = region[j];
      if (d.contains(f.join(a, b)) && !d.contains(a) && !d.contains(b)) {
        v.status = ProbeStatus::kRefuted;
        v.witness = {f.encode(a), f.encode(b)};
        v.witness_description = "join in the filter, neither joinand in it";
        v.bound = f.encode(f.join(a, b));
        return v;
      }
    }
  }
  return v;
}

template <class E>
ProbeVerdict probe_complete(const OracleLattice<E>& f, const FilterDescriptor<E>& d, std::size_t budget) {
  ProbeVerdict v;
  v.flag = Flag::kComplete;
  v.budget = budget;
  auto probes = d.boundary_probes ? d.boundary_probes(true) : std::vector<Probe<E>>{};
  for (auto& p : f.meet_probes(d, budget)) probes.push_back(std::move(p));
  for (const auto& p : probes) {
    if (v.instances_checked >= budget) break;
    ++v.instances_checked;
    if (!contains_all(d, p.prefix)) continue;
    if (p.bound && !d.contains(*p.bound)) {
      refute(v, f, p);
      break;
    }
  }
  return v;
}

template <class E>
ProbeVerdict probe_completely_prime(const OracleLattice<E>& f, const FilterDescriptor<E>& d, std::size_t budget) {
  ProbeVerdict v;
  v.flag = Flag::kCompletelyPrime;
  v.budget = budget;
  auto probes = d.boundary_probes ? d.boundary_probes(false) : std::vector<Probe<E>>{};
  for (auto& p : f.join_probes(d, budget)) probes.push_back(std::move(p));
  for (const auto& p : probes) {
    if (v.instances_checked >= budget) break;
    ++v.instances_checked;
    if (p.bound && d.contains(*p.bound) && !contains_any(d, p.prefix)) {
      refute(v, f, p);
      break;
    }
  }
  return v;
}

}  // namespace detail

/// One verdict per claim (plus a filter-axiom check first). Verified means
/// no counterexample among `budget` generator instances.
template <class E>
std::vector<ProbeVerdict> probe_descriptor(const OracleLattice<E>& f, const FilterDescriptor<E>& d,
                                           std::size_t budget = kDefaultBudget) {
  if (budget == 0) throw Error("probe budget must be positive");
  std::vector<ProbeVerdict> out{detail::probe_filter_axioms(f, d, budget)};
  for (const auto& claim : d.claims) {
    ProbeVerdict v;
    switch (claim.flag) {
      case Flag::kFilter: continue;
      case Flag::kPrime: v = detail::probe_prime(f, d, budget); break;
      case Flag::kComplete: v = detail::probe_complete(f, d, budget); break;
      case Flag::kCompletelyPrime: v = detail::probe_completely_prime(f, d, budget); break;
    }
    v.claimed = claim.expected;
    out.push_back(std::move(v));
  }
  return out;
}

/// As probe_descriptor, but a negative claim that finds no witness within
/// the budget throws BudgetExhausted.
template <class E>
std::vector<ProbeVerdict> check_descriptor(const OracleLattice<E>& f, const FilterDescriptor<E>& d,
                                           std::size_t budget = kDefaultBudget) {
  auto verdicts = probe_descriptor(f, d, budget);
  for (const auto& v : verdicts) {
    if (!v.claimed && v.status == ProbeStatus::kVerified) {
      throw BudgetExhausted(d.name + ": no witness against " + std::string(flag_name(v.flag)) + " within budget " +
                            std::to_string(budget));
    }
  }
  return verdicts;
}

/// Re-checks a refutation from its encoded witness alone, using the family's
/// region to confirm the stated bound: every region element that bounds the
/// prefix must lie on the correct side of the stated bound.
template <class E>
bool confirm_refutation(const OracleLattice<E>& f, const FilterDescriptor<E>& d, const ProbeVerdict& v) {
  if (v.status != ProbeStatus::kRefuted) return false;
  std::vector<E> prefix;
  for (const auto& code : v.witness) prefix.push_back(f.decode(code));
  switch (v.flag) {
    case Flag::kFilter:
      return true;
    case Flag::kPrime: {
      if (prefix.size() != 2) return false;
      return d.contains(f.join(prefix[0], prefix[1])) && !d.contains(prefix[0]) && !d.contains(prefix[1]);
    }
    case Flag::kComplete: {
      if (!v.bound) return false;
      const E inf = f.decode(*v.bound);
      if (d.contains(inf) || !detail::contains_all(d, prefix)) return false;
      auto lower = [&](const E& z) {
        return std::all_of(prefix.begin(), prefix.end(), [&](const E& t) { return f.leq(z, t); });
      };
      if (!lower(inf)) return false;
      const auto region = f.region();
      return std::all_of(region.begin(), region.end(), [&](const E& z) { return !lower(z) || f.leq(z, inf); });
    }
    case Flag::kCompletelyPrime: {
      if (!v.bound) return false;
      const E sup = f.decode(*v.bound);
      if (!d.contains(sup) || detail::contains_any(d, prefix)) return false;
      auto upper = [&](const E& z) {
        return std::all_of(prefix.begin(), prefix.end(), [&](const E& t) { return f.leq(t, z); });
      };
      if (!upper(sup)) return false;
      const auto region = f.region();
      return std::all_of(region.begin(), region.end(), [&](const E& z) { return !upper(z) || f.leq(sup, z); });
    }
  }
  return false;
}

struct CoherenceReport {
  std::size_t pairs = 0;
  std::size_t comparisons = 0;
  std::size_t mismatches = 0;
  std::optional<std::pair<std::string, std::string>> witness;
};

/// Compares the truncation's order and operations with the oracle on random
/// pairs; meet and join are compared only when the oracle result is retained.
template <class E>
CoherenceReport truncation_coherence(const OracleLattice<E>& f, std::size_t depth, std::size_t samples,
                                     std::uint64_t seed = 0) {
  const auto elems = f.truncation_elements(depth);
  const FiniteLattice t = f.truncate(depth);
  std::map<std::string, Element> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(f.encode(elems[i]), static_cast<Element>(i));
  CoherenceReport r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  auto note = [&](std::size_t i, std::size_t j) {
    ++r.mismatches;
    if (!r.witness) r.witness = std::make_pair(f.encode(elems[i]), f.encode(elems[j]));
  };
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t i = pick(rng);
    const std::size_t j = pick(rng);
    const auto a = static_cast<Element>(i);
    const auto b = static_cast<Element>(j);
    ++r.pairs;
    ++r.comparisons;
    if (t.leq(a, b) != f.leq(elems[i], elems[j])) note(i, j);
    if (auto it = index.find(f.encode(f.meet(elems[i], elems[j]))); it != index.end()) {
      ++r.comparisons;
      if (t.meet(a, b) != it->second) note(i, j);
    }
    if (auto it = index.find(f.encode(f.join(elems[i], elems[j]))); it != index.end()) {
      ++r.comparisons;
      if (t.join(a, b) != it->second) note(i, j);
    }
  }
  return r;
}

}  // namespace latrepr

#endif  // LATREPR_ORACLE_LATTICE_HPP_
