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

#ifndef LATREPR_FAMILIES_HPP_
#define LATREPR_FAMILIES_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "latrepr/oracle_lattice.hpp"

namespace latrepr {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q" or "p". Throws ParseError.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

// ---------------------------------------------------------------------------
// ℚ ∩ [0,1]

/// Irrational r in (lo, hi) given as the only root there of a polynomial
/// with rational coefficients (lowest degree first).
struct IrrationalCut {
  std::string name;
  std::vector<Rational> poly;
  Rational lo;
  Rational hi;

  Rational eval(const Rational& x) const;
  /// r < x, decided exactly.
  bool below(const Rational& x) const;
  /// Bracket after k bisection steps.
  std::pair<Rational, Rational> bracket(std::size_t k) const;
};

IrrationalCut cut_inverse_sqrt2();   ///< 1/√2
IrrationalCut cut_golden();          ///< (√5−1)/2
IrrationalCut cut_sqrt2_minus_one(); ///< √2−1

class UnitIntervalRationals final : public OracleLattice<Rational> {
 public:
  std::string id() const override { return "qunit"; }
  std::string description() const override;
  bool leq(const Rational& a, const Rational& b) const override { return a <= b; }
  Rational meet(const Rational& a, const Rational& b) const override { return a < b ? a : b; }
  Rational join(const Rational& a, const Rational& b) const override { return a < b ? b : a; }
  Rational bottom() const override { return 0; }
  Rational top() const override { return 1; }
  std::string encode(const Rational& a) const override { return format_rational(a); }
  Rational decode(std::string_view code) const override;
  /// Rationals in [0,1] with denominator at most `depth`, ascending.
  std::vector<Rational> truncation_elements(std::size_t depth) const override;
  std::vector<Rational> region() const override { return truncation_elements(kRegionDepth); }
  std::vector<Probe<Rational>> meet_probes(const FilterDescriptor<Rational>& d, std::size_t budget) const override;
  std::vector<Probe<Rational>> join_probes(const FilterDescriptor<Rational>& d, std::size_t budget) const override;
  std::vector<FilterDescriptor<Rational>> catalog() const override;

  static FilterDescriptor<Rational> principal(const Rational& x);
  static FilterDescriptor<Rational> half_open(const Rational& x);
  static FilterDescriptor<Rational> cut(const IrrationalCut& r);

  static constexpr std::size_t kRegionDepth = 12;
  static constexpr std::size_t kChainLength = 40;
};

UnitIntervalRationals unit_interval_rationals();

// ---------------------------------------------------------------------------
// (N̄ × N̄) ∪ {0}, N̄ the non-positive integers

struct GridPoint {
  bool is_bottom = false;
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

GridPoint grid_bottom();
GridPoint grid_point(std::int64_t x, std::int64_t y);

class NbarSquaredWithBottom final : public OracleLattice<GridPoint> {
 public:
  std::string id() const override { return "nbar2bot"; }
  std::string description() const override;
  bool leq(const GridPoint& a, const GridPoint& b) const override;
  GridPoint meet(const GridPoint& a, const GridPoint& b) const override;
  GridPoint join(const GridPoint& a, const GridPoint& b) const override;
  GridPoint bottom() const override { return grid_bottom(); }
  GridPoint top() const override { return grid_point(0, 0); }
  std::string encode(const GridPoint& a) const override;
  GridPoint decode(std::string_view code) const override;
  /// Corner [−(depth−1), 0]² plus the bottom.
  std::vector<GridPoint> truncation_elements(std::size_t depth) const override;
  std::vector<GridPoint> region() const override { return truncation_elements(kRegionDepth); }
  std::vector<Probe<GridPoint>> meet_probes(const FilterDescriptor<GridPoint>& d, std::size_t budget) const override;
  std::vector<Probe<GridPoint>> join_probes(const FilterDescriptor<GridPoint>& d, std::size_t budget) const override;
  std::vector<FilterDescriptor<GridPoint>> catalog() const override;

  static FilterDescriptor<GridPoint> column_half_plane(std::int64_t n);  ///< {(x,y) : x ≥ −n}
  static FilterDescriptor<GridPoint> row_half_plane(std::int64_t n);     ///< {(x,y) : y ≥ −n}
  static FilterDescriptor<GridPoint> nonzero();                          ///< L ∖ {0}

  static constexpr std::size_t kRegionDepth = 7;
  static constexpr std::size_t kChainLength = 16;
};

NbarSquaredWithBottom nbar_squared_with_bottom();

// ---------------------------------------------------------------------------
// (N̄ × N̄) ∪ N with N a chain below the grid (0 is the bottom)

struct StackPoint {
  bool is_nat = false;
  std::int64_t n = 0;  ///< when is_nat
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const StackPoint&, const StackPoint&) = default;
};

StackPoint stack_nat(std::int64_t n);
StackPoint stack_grid(std::int64_t x, std::int64_t y);

/// Outcome of searching for a subset of the naturals whose join is a grid point.
struct DensityVerdict {
  std::string target;
  bool refuted = false;  ///< no subset of N joins to the target
  std::size_t finite_subsets_checked = 0;
  std::size_t upper_bounds_checked = 0;
  std::string witness_description;
};

class NbarSquaredOverNats final : public OracleLattice<StackPoint> {
 public:
  std::string id() const override { return "nbar2nat"; }
  std::string description() const override;
  bool leq(const StackPoint& a, const StackPoint& b) const override;
  StackPoint meet(const StackPoint& a, const StackPoint& b) const override;
  StackPoint join(const StackPoint& a, const StackPoint& b) const override;
  StackPoint bottom() const override { return stack_nat(0); }
  StackPoint top() const override { return stack_grid(0, 0); }
  std::string encode(const StackPoint& a) const override;
  StackPoint decode(std::string_view code) const override;
  /// 0..depth−1 of the chain plus the corner [−(depth−1), 0]².
  std::vector<StackPoint> truncation_elements(std::size_t depth) const override;
  std::vector<StackPoint> region() const override { return truncation_elements(kRegionDepth); }
  std::vector<Probe<StackPoint>> meet_probes(const FilterDescriptor<StackPoint>& d, std::size_t budget) const override;
  std::vector<Probe<StackPoint>> join_probes(const FilterDescriptor<StackPoint>& d, std::size_t budget) const override;
  std::vector<FilterDescriptor<StackPoint>> catalog() const override;

  static FilterDescriptor<StackPoint> column_strip(std::int64_t n);  ///< [−n,0] × N̄
  static FilterDescriptor<StackPoint> row_strip(std::int64_t n);     ///< N̄ × [−n,0]

  /// Shows that no subset of the chain joins to `target` (a grid point):
  /// finite subsets join inside the chain, and every infinite one has the
  /// whole grid as upper bounds with no least element among them.
  DensityVerdict refute_join_density(const StackPoint& target, std::size_t budget = kDefaultBudget) const;

  static constexpr std::size_t kRegionDepth = 7;
  static constexpr std::size_t kChainLength = 16;
};

NbarSquaredOverNats nbar_squared_over_nats();

// ---------------------------------------------------------------------------
// Finite and cofinite subsets of N

struct FinCofin {
  bool cofinite = false;
  std::vector<std::uint32_t> listed;  ///< the set itself, or its complement when cofinite; sorted
  friend bool operator==(const FinCofin&, const FinCofin&) = default;
};

FinCofin finite_set(std::vector<std::uint32_t> xs);
FinCofin cofinite_set(std::vector<std::uint32_t> missing);
FinCofin complement(const FinCofin& a);
bool member(const FinCofin& a, std::uint32_t n);

class FiniteCofiniteBA final : public OracleLattice<FinCofin> {
 public:
  std::string id() const override { return "fincofin"; }
  std::string description() const override;
  bool leq(const FinCofin& a, const FinCofin& b) const override;
  FinCofin meet(const FinCofin& a, const FinCofin& b) const override;
  FinCofin join(const FinCofin& a, const FinCofin& b) const override;
  FinCofin bottom() const override { return finite_set({}); }
  FinCofin top() const override { return cofinite_set({}); }
  std::string encode(const FinCofin& a) const override;
  FinCofin decode(std::string_view code) const override;
  /// Subsets of {0, ..., depth−1}.
  std::vector<FinCofin> truncation_elements(std::size_t depth) const override;
  /// Subsets of {0, ..., 5} and their complements.
  std::vector<FinCofin> region() const override;
  std::vector<Probe<FinCofin>> meet_probes(const FilterDescriptor<FinCofin>& d, std::size_t budget) const override;
  std::vector<Probe<FinCofin>> join_probes(const FilterDescriptor<FinCofin>& d, std::size_t budget) const override;
  std::vector<FilterDescriptor<FinCofin>> catalog() const override;

  static FilterDescriptor<FinCofin> principal_ultrafilter(std::uint32_t n);  ///< {A : n ∈ A}
  static FilterDescriptor<FinCofin> frechet();                               ///< cofinite sets

  static constexpr std::uint32_t kRegionDepth = 6;
  static constexpr std::uint32_t kChainLength = 12;
};

FiniteCofiniteBA finite_cofinite_ba();

// ---------------------------------------------------------------------------
// Finite unions of half-open rational intervals in [0,1)

struct IntervalSet {
  /// Sorted, disjoint, non-adjacent, each lo < hi.
  std::vector<std::pair<Rational, Rational>> pieces;
  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;
};

/// Normalizes arbitrary pieces [lo, hi) ⊆ [0,1); throws MalformedInterval
/// when lo >= hi or an endpoint lies outside [0,1].
IntervalSet make_interval_set(std::vector<std::pair<Rational, Rational>> pieces);
IntervalSet complement(const IntervalSet& a);
bool member(const IntervalSet& a, const Rational& q);

class RationalIntervalBA final : public OracleLattice<IntervalSet> {
 public:
  std::string id() const override { return "ratint"; }
  std::string description() const override;
  bool leq(const IntervalSet& a, const IntervalSet& b) const override;
  IntervalSet meet(const IntervalSet& a, const IntervalSet& b) const override;
  IntervalSet join(const IntervalSet& a, const IntervalSet& b) const override;
  IntervalSet bottom() const override { return {}; }
  IntervalSet top() const override;
  std::string encode(const IntervalSet& a) const override;
  IntervalSet decode(std::string_view code) const override;
  /// Unions of the cells [i/depth, (i+1)/depth).
  std::vector<IntervalSet> truncation_elements(std::size_t depth) const override;
  std::vector<IntervalSet> region() const override { return truncation_elements(kRegionDepth); }
  std::vector<Probe<IntervalSet>> meet_probes(const FilterDescriptor<IntervalSet>& d,
                                              std::size_t budget) const override;
  std::vector<Probe<IntervalSet>> join_probes(const FilterDescriptor<IntervalSet>& d,
                                              std::size_t budget) const override;
  std::vector<FilterDescriptor<IntervalSet>> catalog() const override;

  static FilterDescriptor<IntervalSet> point_ultrafilter(const Rational& q);  ///< {A : q ∈ A}

  static constexpr std::size_t kRegionDepth = 6;
  static constexpr std::size_t kChainLength = 12;
};

RationalIntervalBA rational_interval_ba();

// ---------------------------------------------------------------------------
// Type-erased access by family id, on encoded elements.

struct DescriptorReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<ProbeVerdict> verdicts;
  /// One entry per verdict: refutations re-checked from the witness alone.
  std::vector<bool> confirmed;

  bool matches() const;
};

class AnyFamily {
 public:
  struct Concept;

  explicit AnyFamily(std::shared_ptr<const Concept> impl) : impl_(std::move(impl)) {}

  std::string id() const;
  std::string description() const;
  bool leq(std::string_view a, std::string_view b) const;
  std::string meet(std::string_view a, std::string_view b) const;
  std::string join(std::string_view a, std::string_view b) const;
  std::string bottom() const;
  std::string top() const;
  /// Round trip through the codec; throws ParseError.
  std::string normalize(std::string_view code) const;
  FiniteLattice truncate(std::size_t depth) const;
  std::vector<std::string> catalog() const;
  bool contains(std::string_view descriptor, std::string_view code) const;
  DescriptorReport check(std::string_view descriptor, std::size_t budget = kDefaultBudget) const;
  std::vector<DescriptorReport> check_catalog(std::size_t budget = kDefaultBudget) const;
  CoherenceReport coherence(std::size_t depth, std::size_t samples, std::uint64_t seed = 0) const;
  /// Family-specific extra refuters (the join-density search for nbar2nat).
  std::vector<DensityVerdict> density_checks(std::size_t budget = kDefaultBudget) const;

 private:
  std::shared_ptr<const Concept> impl_;
};

std::vector<std::string> family_ids();
/// Throws UnknownFamily.
AnyFamily make_family(std::string_view id);

}  // namespace latrepr

#endif  // LATREPR_FAMILIES_HPP_
