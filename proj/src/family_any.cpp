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

std::string_view flag_name(Flag flag) {
  switch (flag) {
    case Flag::kFilter: return "filter";
    case Flag::kPrime: return "prime";
    case Flag::kComplete: return "complete";
    case Flag::kCompletelyPrime: return "completely_prime";
  }
  return "unknown";
}

bool DescriptorReport::matches() const {
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    if (!verdicts[i].matches()) return false;
    if (verdicts[i].status == ProbeStatus::kRefuted && !confirmed[i]) return false;
  }
  return true;
}

namespace {

std::int64_t parse_index(std::string_view text, std::string_view name) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("bad parameter in descriptor '" + std::string(name) + "'");
  }
  return v;
}

/// Splits "kind:param"; the parameter is empty when there is no colon.
std::pair<std::string_view, std::string_view> split_name(std::string_view name) {
  const auto colon = name.find(':');
  if (colon == std::string_view::npos) return {name, {}};
  return {name.substr(0, colon), name.substr(colon + 1)};
}

// Parameterized descriptors beyond the catalog entries.

std::optional<FilterDescriptor<Rational>> named_descriptor(const UnitIntervalRationals&, std::string_view name) {
  const auto [kind, arg] = split_name(name);
  if (kind == "principal") return UnitIntervalRationals::principal(unit_interval_rationals().decode(arg));
  if (kind == "halfopen") {
    const Rational x = unit_interval_rationals().decode(arg);
    if (x == 1) throw ParseError("(1,1] is empty");
    return UnitIntervalRationals::half_open(x);
  }
  if (kind == "cut") {
    for (const auto& r : {cut_inverse_sqrt2(), cut_golden(), cut_sqrt2_minus_one()}) {
      if (r.name == arg) return UnitIntervalRationals::cut(r);
    }
  }
  return std::nullopt;
}

std::optional<FilterDescriptor<GridPoint>> named_descriptor(const NbarSquaredWithBottom&, std::string_view name) {
  const auto [kind, arg] = split_name(name);
  if (kind == "xge" || kind == "yge") {
    const std::int64_t n = -parse_index(arg, name);
    if (n < 0) throw ParseError("half-plane bound must be non-positive");
    return kind == "xge" ? NbarSquaredWithBottom::column_half_plane(n) : NbarSquaredWithBottom::row_half_plane(n);
  }
  if (kind == "nonzero" && arg.empty()) return NbarSquaredWithBottom::nonzero();
  return std::nullopt;
}

std::optional<FilterDescriptor<StackPoint>> named_descriptor(const NbarSquaredOverNats&, std::string_view name) {
  const auto [kind, arg] = split_name(name);
  if (kind == "xstrip" || kind == "ystrip") {
    const std::int64_t n = parse_index(arg, name);
    if (n < 0) throw ParseError("strip width must be non-negative");
    return kind == "xstrip" ? NbarSquaredOverNats::column_strip(n) : NbarSquaredOverNats::row_strip(n);
  }
  return std::nullopt;
}

std::optional<FilterDescriptor<FinCofin>> named_descriptor(const FiniteCofiniteBA&, std::string_view name) {
  const auto [kind, arg] = split_name(name);
  if (kind == "point") {
    const std::int64_t n = parse_index(arg, name);
    if (n < 0) throw ParseError("point must be a natural number");
    return FiniteCofiniteBA::principal_ultrafilter(static_cast<std::uint32_t>(n));
  }
  if (kind == "frechet" && arg.empty()) return FiniteCofiniteBA::frechet();
  return std::nullopt;
}

std::optional<FilterDescriptor<IntervalSet>> named_descriptor(const RationalIntervalBA&, std::string_view name) {
  const auto [kind, arg] = split_name(name);
  if (kind == "point") {
    const Rational q = parse_rational(arg);
    if (q < 0 || q >= 1) throw ParseError("point must lie in [0,1)");
    return RationalIntervalBA::point_ultrafilter(q);
  }
  return std::nullopt;
}

}  // namespace

struct AnyFamily::Concept {
  virtual ~Concept() = default;
  virtual std::string id() const = 0;
  virtual std::string description() const = 0;
  virtual bool leq(std::string_view a, std::string_view b) const = 0;
  virtual std::string meet(std::string_view a, std::string_view b) const = 0;
  virtual std::string join(std::string_view a, std::string_view b) const = 0;
  virtual std::string bottom() const = 0;
  virtual std::string top() const = 0;
  virtual std::string normalize(std::string_view code) const = 0;
  virtual FiniteLattice truncate(std::size_t depth) const = 0;
  virtual std::vector<std::string> catalog() const = 0;
  virtual bool contains(std::string_view descriptor, std::string_view code) const = 0;
  virtual DescriptorReport check(std::string_view descriptor, std::size_t budget) const = 0;
  virtual std::vector<DescriptorReport> check_catalog(std::size_t budget) const = 0;
  virtual CoherenceReport coherence(std::size_t depth, std::size_t samples, std::uint64_t seed) const = 0;
  virtual std::vector<DensityVerdict> density_checks(std::size_t budget) const = 0;
};

namespace {

template <class F>
class Model final : public AnyFamily::Concept {
 public:
  using E = typename F::element_type;

  std::string id() const override { return f_.id(); }
  std::string description() const override { return f_.description(); }
  bool leq(std::string_view a, std::string_view b) const override { return f_.leq(f_.decode(a), f_.decode(b)); }
  std::string meet(std::string_view a, std::string_view b) const override {
    return f_.encode(f_.meet(f_.decode(a), f_.decode(b)));
  }
  std::string join(std::string_view a, std::string_view b) const override {
    return f_.encode(f_.join(f_.decode(a), f_.decode(b)));
  }
  std::string bottom() const override { return f_.encode(f_.bottom()); }
  std::string top() const override { return f_.encode(f_.top()); }
  std::string normalize(std::string_view code) const override { return f_.encode(f_.decode(code)); }
  FiniteLattice truncate(std::size_t depth) const override { return f_.truncate(depth); }

  std::vector<std::string> catalog() const override {
    std::vector<std::string> out;
    for (const auto& d : f_.catalog()) out.push_back(d.name);
    return out;
  }

  bool contains(std::string_view descriptor, std::string_view code) const override {
    return lookup(descriptor).contains(f_.decode(code));
  }

  DescriptorReport check(std::string_view descriptor, std::size_t budget) const override {
    return report(lookup(descriptor), budget);
  }

  std::vector<DescriptorReport> check_catalog(std::size_t budget) const override {
    std::vector<DescriptorReport> out;
    for (const auto& d : f_.catalog()) out.push_back(report(d, budget));
    return out;
  }

  CoherenceReport coherence(std::size_t depth, std::size_t samples, std::uint64_t seed) const override {
    return truncation_coherence(f_, depth, samples, seed);
  }

  std::vector<DensityVerdict> density_checks(std::size_t budget) const override {
    std::vector<DensityVerdict> out;
    if constexpr (std::is_same_v<F, NbarSquaredOverNats>) {
      for (const auto& p : f_.region()) {
        if (!p.is_nat) out.push_back(f_.refute_join_density(p, budget));
      }
    }
    return out;
  }

 private:
  FilterDescriptor<E> lookup(std::string_view name) const {
    for (auto& d : f_.catalog()) {
      if (d.name == name) return d;
    }
    if (auto d = named_descriptor(f_, name)) return *d;
    throw ParseError("unknown descriptor '" + std::string(name) + "' for family " + f_.id());
  }

  DescriptorReport report(const FilterDescriptor<E>& d, std::size_t budget) const {
    DescriptorReport r{d.name, d.parameters, check_descriptor(f_, d, budget), {}};
    for (const auto& v : r.verdicts) {
      r.confirmed.push_back(v.status == ProbeStatus::kRefuted ? confirm_refutation(f_, d, v) : true);
    }
    return r;
  }

  F f_;
};

}  // namespace

std::string AnyFamily::id() const { return impl_->id(); }
std::string AnyFamily::description() const { return impl_->description(); }
bool AnyFamily::leq(std::string_view a, std::string_view b) const { return impl_->leq(a, b); }
std::string AnyFamily::meet(std::string_view a, std::string_view b) const { return impl_->meet(a, b); }
std::string AnyFamily::join(std::string_view a, std::string_view b) const { return impl_->join(a, b); }
std::string AnyFamily::bottom() const { return impl_->bottom(); }
std::string AnyFamily::top() const { return impl_->top(); }
std::string AnyFamily::normalize(std::string_view code) const { return impl_->normalize(code); }
FiniteLattice AnyFamily::truncate(std::size_t depth) const { return impl_->truncate(depth); }
std::vector<std::string> AnyFamily::catalog() const { return impl_->catalog(); }
bool AnyFamily::contains(std::string_view descriptor, std::string_view code) const {
  return impl_->contains(descriptor, code);
}
DescriptorReport AnyFamily::check(std::string_view descriptor, std::size_t budget) const {
  return impl_->check(descriptor, budget);
}
std::vector<DescriptorReport> AnyFamily::check_catalog(std::size_t budget) const {
  return impl_->check_catalog(budget);
}
CoherenceReport AnyFamily::coherence(std::size_t depth, std::size_t samples, std::uint64_t seed) const {
  return impl_->coherence(depth, samples, seed);
}
std::vector<DensityVerdict> AnyFamily::density_checks(std::size_t budget) const {
  return impl_->density_checks(budget);
}

std::vector<std::string> family_ids() { return {"qunit", "nbar2bot", "nbar2nat", "fincofin", "ratint"}; }

AnyFamily make_family(std::string_view id) {
  if (id == "qunit") return AnyFamily(std::make_shared<Model<UnitIntervalRationals>>());
  if (id == "nbar2bot") return AnyFamily(std::make_shared<Model<NbarSquaredWithBottom>>());
  if (id == "nbar2nat") return AnyFamily(std::make_shared<Model<NbarSquaredOverNats>>());
  if (id == "fincofin") return AnyFamily(std::make_shared<Model<FiniteCofiniteBA>>());
  if (id == "ratint") return AnyFamily(std::make_shared<Model<RationalIntervalBA>>());
  throw UnknownFamily(std::string(id));
}

}  // namespace latrepr
