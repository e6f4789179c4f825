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

// Acceptance run: one PASS/FAIL line per criterion. Every check is exact;
// the only tolerances are the pinned runtime limits below. Expected values
// come from brute-force recomputation over the order matrix.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "latrepr/core.hpp"
#include "latrepr/families.hpp"
#include "latrepr/filters.hpp"
#include "latrepr/generate.hpp"
#include "latrepr/irreducibles.hpp"
#include "latrepr/modelcheck.hpp"
#include "latrepr/representation.hpp"
#include "latrepr/ultra.hpp"
#include "oracle.hpp"

namespace {

using namespace latrepr;

// Corpus sizes and seeds.
constexpr std::size_t kExhaustiveMaxSize = 6;
constexpr std::size_t kRandomLattices = 500;
constexpr std::size_t kRandomMaxSize = 9;
constexpr std::uint64_t kCorpusSeed = 0;
constexpr std::size_t kBirkhoffMaxSize = 8;
constexpr std::size_t kBooleanMaxAtoms = 4;
constexpr std::size_t kFamilyBudget = 1000;
constexpr std::size_t kModelMaxSize = 10;
constexpr std::size_t kUltraMaxSize = 5;
constexpr std::size_t kUltraMaxIndex = 3;
constexpr std::size_t kProductPairs = 100;
constexpr std::uint64_t kProductSeed = 1;
constexpr std::size_t kSampledSubsets = 1000;

// Runtime limits in seconds, by criterion.
constexpr double kLimitSeconds[] = {0, 60, 1, 60, 60, 60, 60, 120, 60, 120, 60};

constexpr std::size_t kShownFailures = 5;

struct Outcome {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::string summary;

  void require(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (!ok) failures.push_back(what());
  }
};

std::string show(const FiniteLattice& l) {
  std::ostringstream out;
  out << "|L|=" << l.size() << " covers{";
  bool first = true;
  for (const auto& [a, b] : l.poset().covers()) {
    out << (first ? "" : ",") << a << "<" << b;
    first = false;
  }
  return out.str() + "}";
}

std::string show(const ElementSet& s) {
  std::string out = "{";
  for_each_member(s, [&](Element e) { out += (out.size() > 1 ? "," : "") + std::to_string(e); });
  return out + "}";
}

// Brute-force view of a lattice: order matrix plus meet and join tables
// found by scanning bounds.
struct Brute {
  std::size_t n;
  oracle::Matrix leq;
  oracle::Tables t;

  explicit Brute(const FiniteLattice& l) : n(l.size()), leq(oracle::matrix_of(l)), t(oracle::tables(leq)) {}

  Element meet(Element a, Element b) const { return static_cast<Element>(t.meet[a][b]); }
  Element join(Element a, Element b) const { return static_cast<Element>(t.join[a][b]); }

  bool distributive() const {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
    return true;
  }

  Element meet_of(const ElementSet& s) const {
    Element m = static_cast<Element>(t.top);
    for_each_member(s, [&](Element e) { m = meet(m, e); });
    return m;
  }
  Element join_of(const ElementSet& s) const {
    Element j = static_cast<Element>(t.bottom);
    for_each_member(s, [&](Element e) { j = join(j, e); });
    return j;
  }

  bool is_filter(const ElementSet& s) const {
    if (s.none()) return false;
    for (Element a = 0; a < n; ++a) {
      if (!s[a]) continue;
      for (Element b = 0; b < n; ++b) {
        if (leq[a][b] && !s[b]) return false;
        if (s[b] && !s[meet(a, b)]) return false;
      }
    }
    return true;
  }

  bool is_prime_filter(const ElementSet& s) const {
    if (!is_filter(s) || s[t.bottom]) return false;
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (s[join(a, b)] && !s[a] && !s[b]) return false;
    return true;
  }

  std::set<std::vector<Element>> prime_filters() const {
    std::set<std::vector<Element>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      const ElementSet s(n, mask);
      if (is_prime_filter(s)) out.insert(members_of(s));
    }
    return out;
  }

  ElementSet up(Element a) const {
    ElementSet s(n);
    for (Element b = 0; b < n; ++b)
      if (leq[a][b]) s.set(b);
    return s;
  }

  template <class F>
  void for_each_subset(F&& f) const {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) f(ElementSet(n, mask));
  }
};

// Representation invariants recomputed from the images alone.
bool brute_representation_ok(const Brute& b, const Representation& h) {
  for (std::size_t x = 0; x < h.base_size(); ++x) {
    if (!b.is_prime_filter(h.base()[x])) return false;
    for (Element a = 0; a < b.n; ++a)
      if (h.assign(a)[x] != h.base()[x][a]) return false;
  }
  std::set<std::vector<Element>> images;
  for (Element a = 0; a < b.n; ++a) images.insert(members_of(h.assign(a)));
  if (images.size() != b.n) return false;
  for (Element a = 0; a < b.n; ++a)
    for (Element c = 0; c < b.n; ++c) {
      if (h.assign(b.meet(a, c)) != (h.assign(a) & h.assign(c))) return false;
      if (h.assign(b.join(a, c)) != (h.assign(a) | h.assign(c))) return false;
    }
  return h.assign(static_cast<Element>(b.t.bottom)).none() && h.assign(static_cast<Element>(b.t.top)).all();
}

bool brute_meet_complete(const Brute& b, const Representation& h) {
  bool ok = true;
  b.for_each_subset([&](const ElementSet& s) {
    ElementSet meet = full_set(h.base_size());
    for_each_member(s, [&](Element e) { meet &= h.assign(e); });
    ok = ok && h.assign(b.meet_of(s)) == meet;
  });
  return ok;
}

bool is_order_isomorphism(const FiniteLattice& from, const FiniteLattice& to, const std::vector<Element>& map) {
  if (from.size() != to.size() || map.size() != from.size()) return false;
  std::set<Element> image(map.begin(), map.end());
  if (image.size() != map.size() || *image.rbegin() >= to.size()) return false;
  for (Element a = 0; a < from.size(); ++a)
    for (Element c = 0; c < from.size(); ++c)
      if (from.leq(a, c) != to.leq(map[a], map[c])) return false;
  return true;
}

struct Corpus {
  std::vector<FiniteLattice> lattices;
  std::vector<bool> distributive;
  std::vector<Representation> representations;
};

Corpus& corpus() {
  static Corpus c = [] {
    Corpus out;
    for (std::size_t n = 1; n <= kExhaustiveMaxSize; ++n)
      for (auto& l : all_lattices(n)) out.lattices.push_back(std::move(l));
    std::mt19937_64 rng(kCorpusSeed);
    for (std::size_t i = 0; i < kRandomLattices; ++i) out.lattices.push_back(random_lattice(kRandomMaxSize, rng));
    return out;
  }();
  return c;
}

// 1. Representable exactly when distributive.
Outcome representability() {
  Outcome o;
  Corpus& c = corpus();
  std::size_t distributive = 0;
  for (const auto& l : c.lattices) {
    const Brute b(l);
    const bool dist = b.distributive();
    c.distributive.push_back(dist);
    distributive += dist;
    o.require(is_distributive(l) == dist, [&] { return "is_distributive disagrees on " + show(l); });
    bool represented = false;
    try {
      Representation h = represent(l);
      represented = check_invariants(h).ok() && brute_representation_ok(b, h);
      if (represented) c.representations.push_back(std::move(h));
    } catch (const NotRepresentable&) {
      represented = false;
    }
    o.require(represented == dist, [&] {
      return std::string(dist ? "distributive lattice not represented: " : "represented non-distributive lattice: ") +
             show(l);
    });
  }
  o.summary = std::to_string(c.lattices.size()) + " lattices (" + std::to_string(distributive) + " distributive)";
  return o;
}

// 2. M3 and N5 have no distinguishing family of prime filters.
Outcome m3_n5() {
  Outcome o;
  for (const auto& [name, l] : {std::pair{"M3", m3()}, std::pair{"N5", n5()}}) {
    const Brute b(l);
    const auto primes = enumerate_prime_filters(l);
    std::set<std::vector<Element>> found;
    for (const auto& f : primes) found.insert(members_of(f.carrier));
    o.require(found == b.prime_filters(), [&] { return std::string(name) + ": prime filters differ from brute force"; });
    const auto d = is_distinguishing(l, std::span<const FilterRecord>(primes));
    o.require(!d.distinguishing && d.witness.has_value(), [&] { return std::string(name) + ": no witness pair"; });
    if (d.witness) {
      const auto [x, y] = *d.witness;
      bool separated = false;
      for (const auto& f : found) {
        const ElementSet s = make_set(l.size(), std::span<const Element>(f));
        separated = separated || s[x] != s[y];
      }
      o.require(x != y && !separated, [&] { return std::string(name) + ": witness pair is separated"; });
    }
    bool refused = false;
    try {
      (void)represent(l);
    } catch (const NotRepresentable&) {
      refused = true;
    }
    o.require(refused, [&] { return std::string(name) + ": represent did not raise NotRepresentable"; });
  }
  o.summary = "witness pairs checked against brute-force prime filters";
  return o;
}

// 3. Meet-completeness of h matches join-completeness of its dual.
Outcome duality() {
  Outcome o;
  for (const auto& h : corpus().representations) {
    const Brute b(h.source());
    const auto meet = verify_meet_complete(h);
    const auto join = verify_join_complete(dual_representation(h));
    o.require(meet.exhaustive && join.exhaustive, [&] { return "not exhaustive on " + show(h.source()); });
    o.require(meet.holds == join.holds, [&] { return "duality fails on " + show(h.source()); });
    o.require(meet.holds == brute_meet_complete(b, h), [&] { return "meet completeness wrong on " + show(h.source()); });
  }
  o.summary = std::to_string(corpus().representations.size()) + " representations, all subsets";
  return o;
}

// 4. A prime filter is complete exactly when its complement ideal is
// completely prime, and completely prime exactly when that ideal is complete.
Outcome ideal_lemma() {
  Outcome o;
  std::size_t filters = 0;
  for (const auto& l : corpus().lattices) {
    const Brute b(l);
    const auto primes = enumerate_prime_filters(l);
    std::set<std::vector<Element>> found;
    for (const auto& f : primes) found.insert(members_of(f.carrier));
    o.require(found == b.prime_filters(), [&] { return "prime filters differ from brute force on " + show(l); });
    for (const auto& f : primes) {
      ++filters;
      const ElementSet& in = f.carrier;
      const ElementSet out = ~in;
      bool f_complete = true, f_cprime = true, i_complete = true, i_cprime = true;
      b.for_each_subset([&](const ElementSet& s) {
        if (s.is_subset_of(in) && !in[b.meet_of(s)]) f_complete = false;
        if (in[b.join_of(s)] && !s.intersects(in)) f_cprime = false;
        if (s.is_subset_of(out) && !out[b.join_of(s)]) i_complete = false;
        if (out[b.meet_of(s)] && !s.intersects(out)) i_cprime = false;
      });
      const auto rec = classify_filter(l, in);
      const auto ideal = complement_ideal(l, f);
      const std::string where = show(in) + " in " + show(l);
      o.require(ideal.carrier == out, [&] { return "complement ideal wrong for " + where; });
      o.require(rec.flags.is_complete == f_complete && rec.flags.is_completely_prime == f_cprime,
                [&] { return "filter flags wrong for " + where; });
      o.require(ideal.flags.is_complete == i_complete && ideal.flags.is_completely_prime == i_cprime,
                [&] { return "ideal flags wrong for " + where; });
      o.require(rec.flags.is_complete == ideal.flags.is_completely_prime,
                [&] { return "complete filter vs completely prime ideal fails for " + where; });
      o.require(rec.flags.is_completely_prime == ideal.flags.is_complete,
                [&] { return "completely prime filter vs complete ideal fails for " + where; });
    }
  }
  o.summary = std::to_string(filters) + " prime filters, all subsets";
  return o;
}

// 5. Birkhoff round trip and canonical extension.
Outcome birkhoff() {
  Outcome o;
  const auto lattices = all_distributive_lattices(kBirkhoffMaxSize);
  for (const auto& l : lattices) {
    const auto iso = birkhoff_roundtrip(l);
    const auto m = oracle::matrix_of(l);
    o.require(iso.join_irreducibles.size() == oracle::join_irreducibles(m).size(),
              [&] { return "join-irreducible count wrong on " + show(l); });
    oracle::Matrix j(iso.join_irreducibles.size(), std::vector<bool>(iso.join_irreducibles.size()));
    for (Element a = 0; a < j.size(); ++a)
      for (Element c = 0; c < j.size(); ++c) j[a][c] = iso.join_irreducibles.leq(a, c);
    o.require(oracle::downsets(j).size() == l.size(), [&] { return "downset count differs on " + show(l); });
    o.require(is_order_isomorphism(l, iso.downsets, iso.map), [&] { return "Birkhoff map not an isomorphism on " + show(l); });

    const FiniteLattice ext = canonical_extension(l);
    const auto map = find_isomorphism(ext, l);
    o.require(map && is_order_isomorphism(ext, l, *map), [&] { return "canonical extension not isomorphic on " + show(l); });
    const Representation h = represent(ext);
    const bool complete = check_invariants(h).ok() && brute_representation_ok(Brute(ext), h) &&
                          verify_meet_complete(h).holds && verify_join_complete(h).holds;
    o.require(complete, [&] { return "canonical extension not completely represented on " + show(l); });
  }
  o.summary = std::to_string(lattices.size()) + " distributive lattices up to " + std::to_string(kBirkhoffMaxSize);
  return o;
}

// 6. Finite Boolean algebras.
Outcome boolean_collapse() {
  Outcome o;
  for (std::size_t k = 1; k <= kBooleanMaxAtoms; ++k) {
    const FiniteLattice l = boolean_algebra(k);
    const Brute b(l);
    const std::string where = "2^" + std::to_string(k);
    const ElementSet at = atoms(l);
    o.require(at.count() == k, [&] { return where + ": wrong atom count"; });

    std::set<std::vector<Element>> atom_filters;
    for_each_member(at, [&](Element a) { atom_filters.insert(members_of(b.up(a))); });
    const auto primes = b.prime_filters();
    std::vector<ElementSet> proper;
    b.for_each_subset([&](const ElementSet& s) {
      if (b.is_filter(s) && !s[b.t.bottom]) proper.push_back(s);
    });
    std::set<std::vector<Element>> maximal;
    for (const auto& s : proper) {
      const bool is_max = std::none_of(proper.begin(), proper.end(),
                                       [&](const ElementSet& t) { return s != t && s.is_subset_of(t); });
      if (is_max) maximal.insert(members_of(s));
    }
    o.require(primes == atom_filters, [&] { return where + ": prime filters are not the atom filters"; });
    o.require(maximal == primes, [&] { return where + ": ultrafilters differ from prime filters"; });

    const auto report = ultrafilter_equivalences(l);
    o.require(report.primes_are_ultrafilters && report.flags_equivalent && report.rows.size() == k,
              [&] { return where + ": ultrafilter equivalences fail"; });
    for (const auto& row : report.rows)
      o.require(row.is_ultrafilter && row.is_principal && row.is_complete && row.is_completely_prime,
                [&] { return where + ": ultrafilter " + show(row.filter.carrier) + " misses a flag"; });

    const Representation h = represent(l);
    std::set<std::vector<Element>> images;
    for (Element a = 0; a < l.size(); ++a) images.insert(members_of(h.assign(a)));
    o.require(h.base_size() == k && images.size() == (std::size_t{1} << k),
              [&] { return where + ": image is not the full powerset of the atoms"; });
  }
  o.summary = "2^1 .. 2^" + std::to_string(kBooleanMaxAtoms);
  return o;
}

const ProbeVerdict* verdict_for(const DescriptorReport& r, Flag flag, bool* confirmed) {
  for (std::size_t i = 0; i < r.verdicts.size(); ++i) {
    if (r.verdicts[i].flag == flag) {
      *confirmed = r.confirmed[i];
      return &r.verdicts[i];
    }
  }
  return nullptr;
}

bool status_is(const DescriptorReport& r, Flag flag, ProbeStatus status) {
  bool confirmed = false;
  const ProbeVerdict* v = verdict_for(r, flag, &confirmed);
  return v != nullptr && v->status == status && (status == ProbeStatus::kVerified || (confirmed && !v->witness.empty()));
}

// 7. Family catalogs.
Outcome families() {
  Outcome o;
  std::size_t descriptors = 0;
  for (const auto& id : family_ids()) {
    for (const auto& r : make_family(id).check_catalog(kFamilyBudget)) {
      ++descriptors;
      o.require(r.matches(), [&] { return id + " " + r.name + ": claim mismatch"; });
    }
  }

  const AnyFamily grid = make_family("nbar2bot");
  for (const auto& name : grid.catalog()) {
    const auto r = grid.check(name, kFamilyBudget);
    o.require(status_is(r, Flag::kComplete, ProbeStatus::kRefuted) &&
                  status_is(r, Flag::kCompletelyPrime, ProbeStatus::kVerified),
              [&] { return "nbar2bot " + name + ": expected refuted-complete, verified-completely-prime"; });
  }
  const AnyFamily strips = make_family("nbar2nat");
  for (const auto& name : strips.catalog()) {
    const auto r = strips.check(name, kFamilyBudget);
    o.require(status_is(r, Flag::kComplete, ProbeStatus::kVerified) &&
                  status_is(r, Flag::kCompletelyPrime, ProbeStatus::kVerified),
              [&] { return "nbar2nat " + name + ": expected verified on both flags"; });
  }

  const AnyFamily q = make_family("qunit");
  std::vector<std::string> principals;
  for (const auto& name : q.catalog()) {
    const auto r = q.check(name, kFamilyBudget);
    if (name.rfind("principal:", 0) == 0) {
      principals.push_back(name);
      o.require(status_is(r, Flag::kComplete, ProbeStatus::kVerified),
                [&] { return "qunit " + name + ": expected verified-complete"; });
    }
    if (name.rfind("cut:", 0) == 0) {
      o.require(status_is(r, Flag::kComplete, ProbeStatus::kVerified) &&
                    status_is(r, Flag::kCompletelyPrime, ProbeStatus::kVerified),
                [&] { return "qunit " + name + ": expected verified on both flags"; });
    }
  }
  // Every principal filter at x > 0 has elements strictly below x.
  for (int k = 1; k <= 7; ++k) principals.push_back("principal:" + std::to_string(k) + "/7");
  for (const auto& name : principals) {
    const auto r = q.check(name, kFamilyBudget);
    o.require(status_is(r, Flag::kComplete, ProbeStatus::kVerified) &&
                  status_is(r, Flag::kCompletelyPrime, ProbeStatus::kRefuted),
              [&] { return "qunit " + name + ": expected a confirmed completely-prime refutation"; });
  }

  const AnyFamily fc = make_family("fincofin");
  const auto r = fc.check("frechet", kFamilyBudget);
  bool confirmed = false;
  const ProbeVerdict* v = verdict_for(r, Flag::kComplete, &confirmed);
  bool descending = v != nullptr && v->status == ProbeStatus::kRefuted && confirmed && v->witness.size() >= 2;
  if (descending) {
    for (std::size_t i = 0; i < v->witness.size(); ++i) {
      descending = descending && v->witness[i].rfind("cof", 0) == 0;
      if (i > 0) {
        descending = descending && fc.leq(v->witness[i], v->witness[i - 1]) &&
                     fc.normalize(v->witness[i]) != fc.normalize(v->witness[i - 1]);
      }
    }
  }
  o.require(descending, [] { return "fincofin frechet: no descending cofinite refutation"; });

  o.summary = std::to_string(descriptors) + " catalog descriptors at budget " + std::to_string(kFamilyBudget);
  return o;
}

// Members of the S-sort that are prime filters or the whole carrier.
std::vector<ElementSet> brute_complete_prime(const Brute& b, const TwoSortedStructure& m) {
  std::vector<ElementSet> out;
  for (const auto& s : m.ssort)
    if (s.all() || b.is_prime_filter(s)) out.push_back(s);
  return out;
}

// 8. Canonical models of finite lattices.
Outcome model_checking() {
  Outcome o;
  const auto lattices = all_distributive_lattices(kModelMaxSize);
  std::size_t flips = 0;
  for (const auto& l : lattices) {
    const TwoSortedStructure model = canonical_model(l);
    const auto report = check_theory(model);
    o.require(report.ok(), [&] { return "canonical model fails on " + show(l); });

    const Brute b(l);
    std::vector<ElementSet> family = brute_complete_prime(b, model);
    for (const auto& s : family) {
      if (s.all()) continue;
      std::vector<ElementSet> cps(report.complete_prime_sets);
      const auto it = std::find(cps.begin(), cps.end(), s);
      if (it == cps.end()) {
        o.require(false, [&] { return "prime filter missing from the complete prime sets on " + show(l); });
        continue;
      }
      const auto pair = uniquely_separated_pair(l, cps, static_cast<std::size_t>(it - cps.begin()));
      o.require(pair.has_value(), [&] { return "no uniquely separated pair for " + show(s) + " in " + show(l); });
      if (!pair) continue;
      ++flips;
      const TwoSortedStructure smaller = without_set(model, s);
      const auto flipped = check_theory(smaller);
      const auto& sep = flipped.verdict(Axiom::kSeparation);
      o.require(!sep.holds && sep.elements.size() == 2, [&] { return "separation still holds without " + show(s); });
      if (sep.elements.size() == 2) {
        const Element x = sep.elements[0], y = sep.elements[1];
        bool separated = false;
        for (const auto& t : brute_complete_prime(b, smaller)) separated = separated || t[x] != t[y];
        o.require(x != y && s[x] != s[y] && !separated,
                  [&] { return "wrong separation witness after removing " + show(s) + " from " + show(l); });
      }
    }
  }

  // Non-distributive lattices must fail the lattice axiom; report every
  // other axiom that fails alongside it.
  for (const auto& [name, l] : {std::pair{"M3", m3()}, std::pair{"N5", n5()}}) {
    const auto report = check_theory(canonical_model(l));
    const auto& lat = report.verdict(Axiom::kLattice);
    bool triple_ok = lat.elements.size() == 3;
    if (triple_ok) {
      const Brute b(l);
      const Element a = lat.elements[0], c = lat.elements[1], d = lat.elements[2];
      triple_ok = b.meet(a, b.join(c, d)) != b.join(b.meet(a, c), b.meet(a, d));
    }
    o.require(!lat.holds && triple_ok, [&] { return std::string(name) + ": distributivity clause not refuted"; });
    for (const auto& v : report.axioms) {
      if (v.axiom == Axiom::kLattice) continue;
      o.require(v.holds, [&] {
        std::string w;
        for (Element e : v.elements) w += (w.empty() ? "" : ",") + l.label(e);
        return std::string(name) + ": " + std::string(axiom_name(v.axiom)) + " also fails (witness " + w +
               "); without distributivity no family of prime filters separates all pairs";
      });
    }
  }

  o.summary = std::to_string(lattices.size()) + " distributive canonical models, " + std::to_string(flips) +
              " filter removals";
  return o;
}

// Brute ∨-⋀ distributivity: a ∨ ⋀S = ⋀{a ∨ s : s ∈ S} for all a, S.
bool brute_vee_bigmeet(const Brute& b) {
  bool ok = true;
  b.for_each_subset([&](const ElementSet& s) {
    for (Element a = 0; a < b.n && ok; ++a) {
      Element rhs = static_cast<Element>(b.t.top);
      for_each_member(s, [&](Element e) { rhs = b.meet(rhs, b.join(a, e)); });
      ok = b.join(a, b.meet_of(s)) == rhs;
    }
  });
  return ok;
}

// 9. Ultrapowers over principal ultrafilters.
Outcome ultrapowers() {
  Outcome o;
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= kUltraMaxSize; ++n) {
    for (const auto& l : all_lattices(n)) {
      const Brute b(l);
      const bool vee = brute_vee_bigmeet(b);
      o.require(is_vee_bigmeet_distributive(l) == vee, [&] { return "vee-bigmeet flag wrong on " + show(l); });
      for (std::size_t size = 1; size <= kUltraMaxIndex; ++size) {
        for (std::size_t i0 = 0; i0 < size; ++i0) {
          const Ultrapower power(l, UltrafilterOnFiniteIndex::principal(size, i0));
          const std::string where = show(l) + " I=" + std::to_string(size) + " i0=" + std::to_string(i0);
          o.require(evaluation_is_isomorphism(power) && is_order_isomorphism(power.lattice(), l, power.evaluation_map()),
                    [&] { return "ultrapower not isomorphic for " + where; });
          const auto root = verify_dist_root(power);
          o.require(root.holds && root.base_distributive == vee && root.power_distributive == vee,
                    [&] { return "dist-root disagrees for " + where; });
          b.for_each_subset([&](const ElementSet& s) {
            ++cases;
            o.require(verify_inf_exist(power, s).holds, [&] { return "inf-exist fails for " + show(s) + " " + where; });
            o.require(power.lower_star(power.star_set(s)) == s,
                      [&] { return "star round trip fails for " + show(s) + " " + where; });
          });
        }
      }
    }
  }
  o.summary = std::to_string(cases) + " (lattice, ultrafilter, subset) cases";
  return o;
}

// 10. Direct products of distributive lattices.
Outcome products() {
  Outcome o;
  const Corpus& c = corpus();
  std::vector<const FiniteLattice*> pool;
  for (std::size_t i = 0; i < c.lattices.size(); ++i)
    if (c.distributive[i]) pool.push_back(&c.lattices[i]);
  std::mt19937_64 rng(kProductSeed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::size_t separated = 0, largest = 0;
  for (std::size_t trial = 0; trial < kProductPairs; ++trial) {
    const std::vector<FiniteLattice> factors{*pool[pick(rng)], *pool[pick(rng)]};
    const FiniteLattice p = direct_product(factors);
    const std::string where = show(factors[0]) + " x " + show(factors[1]);
    largest = std::max(largest, p.size());

    // Expected tables: coordinatewise operations of the factors.
    const Brute f0(factors[0]), f1(factors[1]);
    const ProductIndex index(factors);
    bool tables_ok = p.size() == factors[0].size() * factors[1].size();
    for (Element a = 0; a < p.size() && tables_ok; ++a)
      for (Element b = 0; b < p.size() && tables_ok; ++b) {
        const auto ca = index.coordinates(a), cb = index.coordinates(b);
        const Element m[] = {f0.meet(ca[0], cb[0]), f1.meet(ca[1], cb[1])};
        const Element j[] = {f0.join(ca[0], cb[0]), f1.join(ca[1], cb[1])};
        tables_ok = p.meet(a, b) == index.encode(m) && p.join(a, b) == index.encode(j);
      }
    o.require(tables_ok, [&] { return "product operations are not coordinatewise for " + where; });

    const Brute bp(p);
    o.require(bp.distributive(), [&] { return "product not distributive for " + where; });
    const Representation h = represent(p);
    VerifyOptions v;
    v.mode = p.size() <= v.cap ? VerifyMode::kExhaustive : VerifyMode::kSampled;
    v.samples = kSampledSubsets;
    v.seed = kProductSeed + trial;
    o.require(check_invariants(h).ok() && brute_representation_ok(bp, h) && verify_meet_complete(h, v).holds &&
                  verify_join_complete(h, v).holds,
              [&] { return "product representation fails for " + where; });

    if (p.size() < 2) continue;
    std::uniform_int_distribution<Element> element(0, static_cast<Element>(p.size() - 1));
    const Element f = element(rng);
    Element g = element(rng);
    while (g == f) g = element(rng);
    const auto s = separating_product_filter(factors, f, g);
    o.require(s.has_value(), [&] { return "no product filter separates a pair in " + where; });
    if (!s) continue;
    ++separated;
    bool cylinder = false;
    for (std::size_t k = 0; k < 2 && !cylinder; ++k) {
      const Brute& fk = k == 0 ? f0 : f1;
      ElementSet projection(fk.n);
      bool depends_on_k = true;
      for (Element e = 0; e < p.size(); ++e) {
        const Element ck = index.coordinates(e)[k];
        if ((*s)[e]) projection.set(ck);
      }
      for (Element e = 0; e < p.size(); ++e) depends_on_k = depends_on_k && (*s)[e] == projection[index.coordinates(e)[k]];
      cylinder = depends_on_k && fk.is_prime_filter(projection);
    }
    o.require(bp.is_prime_filter(*s) && (*s)[f] != (*s)[g] && cylinder,
              [&] { return "product filter is not a separating prime cylinder in " + where; });
  }
  o.summary = std::to_string(kProductPairs) + " products (largest " + std::to_string(largest) + "), " +
              std::to_string(separated) + " separating product filters";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"representable exactly when distributive", representability},
      {"M3 and N5 are not representable", m3_n5},
      {"meet completeness dual to join completeness", duality},
      {"prime filter and complement ideal flags", ideal_lemma},
      {"Birkhoff round trip and canonical extension", birkhoff},
      {"finite Boolean algebras", boolean_collapse},
      {"family catalogs match their claims", families},
      {"canonical models satisfy the two-sorted theory", model_checking},
      {"ultrapower lemmas", ultrapowers},
      {"direct products", products},
  };

  bool all = true;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("unexpected exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double limit = kLimitSeconds[i + 1];
    if (seconds > limit) {
      std::ostringstream msg;
      msg << "took " << std::fixed << std::setprecision(2) << seconds << " s, limit " << limit << " s";
      o.failures.push_back(msg.str());
    }
    const bool pass = o.failures.empty();
    all = all && pass;
    std::cout << "criterion " << std::setw(2) << i + 1 << ": " << (pass ? "PASS" : "FAIL") << "  " << criteria[i].title
              << ": " << o.summary << ", " << o.checks << " checks, " << o.failures.size() << " failures ["
              << std::fixed << std::setprecision(2) << seconds << " s]\n";
    for (std::size_t k = 0; k < std::min(o.failures.size(), kShownFailures); ++k) {
      std::cout << "    " << o.failures[k] << "\n";
    }
    if (o.failures.size() > kShownFailures) std::cout << "    ... " << o.failures.size() - kShownFailures << " more\n";
  }
  return all ? 0 : 1;
}
