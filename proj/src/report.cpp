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

#include "latrepr/report.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "latrepr/filters.hpp"
#include "latrepr/irreducibles.hpp"
#include "latrepr/ultra.hpp"

namespace latrepr {

namespace {

Json labels_of(const FiniteLattice& l, const ElementSet& s) {
  Json out = Json::array();
  for_each_member(s, [&](Element e) { out.push_back(l.label(e)); });
  return out;
}

Json triple_json(const FiniteLattice& l, const std::array<Element, 3>& t) {
  return Json::array({l.label(t[0]), l.label(t[1]), l.label(t[2])});
}

VerifyOptions verify_options(const FiniteLattice& l, const ReportOptions& o) {
  VerifyOptions v;
  v.mode = l.size() <= o.cap ? VerifyMode::kExhaustive : VerifyMode::kSampled;
  v.cap = o.cap;
  v.samples = o.samples;
  v.seed = o.seed;
  return v;
}

Json completeness_json(const FiniteLattice& l, const CompletenessVerdict& v) {
  Json out{{"holds", v.holds}, {"exhaustive", v.exhaustive}, {"subsets_checked", v.subsets_checked}};
  if (v.witness) out["witness"] = labels_of(l, *v.witness);
  return out;
}

Json flags_json(const FilterFlags& f) {
  return {{"proper", f.is_proper},         {"prime", f.is_prime},
          {"complete", f.is_complete},     {"completely_prime", f.is_completely_prime},
          {"principal", f.is_principal},   {"ultrafilter", f.is_ultrafilter}};
}

struct RepresentationChecks {
  Json json;
  bool meet_complete = false;
  bool join_complete = false;
};

RepresentationChecks verify_json(const Representation& h, const ReportOptions& options) {
  const FiniteLattice& l = h.source();
  const auto inv = check_invariants(h);
  Json invariants{{"injective", inv.injective},
                  {"preserves_meet", inv.preserves_meet},
                  {"preserves_join", inv.preserves_join},
                  {"irredundant", inv.irredundant},
                  {"preserves_bounds", inv.preserves_bounds}};
  if (inv.witness) invariants["witness"] = Json::array({l.label(inv.witness->first), l.label(inv.witness->second)});
  const auto vo = verify_options(l, options);
  const auto meet = verify_meet_complete(h, vo);
  const auto join = verify_join_complete(h, vo);
  RepresentationChecks out;
  out.meet_complete = inv.ok() && meet.holds;
  out.join_complete = inv.ok() && join.holds;
  out.json = {{"base_size", h.base_size()},
              {"invariants_ok", inv.ok()},
              {"invariants", invariants},
              {"meet_complete", completeness_json(l, meet)},
              {"join_complete", completeness_json(l, join)}};
  return out;
}

Json provenance(const ReportOptions& o) {
  return {{"budget", o.budget}, {"cap", o.cap}, {"samples", o.samples}, {"seed", o.seed}};
}

Json verdict_json(const ProbeVerdict& v, bool confirmed) {
  Json out{{"flag", std::string(flag_name(v.flag))},
           {"claimed", v.claimed},
           {"status", v.status == ProbeStatus::kVerified ? "verified" : "refuted"},
           {"matches", v.matches()},
           {"budget", v.budget},
           {"instances_checked", v.instances_checked}};
  if (v.status == ProbeStatus::kRefuted) {
    out["witness"] = v.witness;
    out["witness_description"] = v.witness_description;
    if (v.bound) out["bound"] = *v.bound;
    out["confirmed"] = confirmed;
  }
  return out;
}

}  // namespace

Json lattice_report(const FiniteLattice& l, const std::string& subject, const ReportOptions& options) {
  Json sections = Json::object();

  const auto violation = distributivity_violation(l);
  Json dist{{"distributive", !violation}};
  if (violation) dist["witness"] = triple_json(l, *violation);
  if (l.size() <= 24) dist["vee_bigmeet_distributive"] = is_vee_bigmeet_distributive(l);
  dist["complemented"] = is_complemented(l);
  sections["distributivity"] = dist;

  const auto irr = irreducibles(l);
  sections["irreducibles"] = {{"join_irreducible", labels_of(l, irr.join_irr)},
                              {"meet_irreducible", labels_of(l, irr.meet_irr)},
                              {"completely_join_irreducible", labels_of(l, irr.completely_join_irr)},
                              {"completely_meet_irreducible", labels_of(l, irr.completely_meet_irr)}};

  Json filters = Json::array();
  for (const auto& f : enumerate_filters(l)) {
    Json row{{"members", labels_of(l, f.carrier)}, {"flags", flags_json(f.flags)}};
    if (f.generator) row["generator"] = l.label(*f.generator);
    filters.push_back(row);
  }
  const auto primes = enumerate_prime_filters(l);
  const auto dist_primes = is_distinguishing(l, std::span<const FilterRecord>(primes));
  Json classification{{"filters", filters}, {"prime_filters", primes.size()},
                      {"primes_distinguishing", dist_primes.distinguishing}};
  if (dist_primes.witness) {
    classification["undistinguished_pair"] =
        Json::array({l.label(dist_primes.witness->first), l.label(dist_primes.witness->second)});
  }
  sections["filter_classification"] = classification;

  bool mcrl = false, jcrl = false;
  try {
    const auto checks = verify_json(represent(l), options);
    sections["representation"] = checks.json;
    mcrl = checks.meet_complete;
    jcrl = checks.join_complete;
  } catch (const NotRepresentable& e) {
    sections["representation"] = {{"error", "NotRepresentable"}, {"witness", triple_json(l, e.triple())}};
  }

  // The prime-filter representation is the one tested for both kinds of
  // completeness, so CRL and biCRL coincide here.
  sections["hierarchy"] = {{"DL", !violation},
                           {"mCRL", mcrl},
                           {"jCRL", jcrl},
                           {"biCRL", mcrl && jcrl},
                           {"CRL", mcrl && jcrl}};

  return {{"subject", subject}, {"size", l.size()}, {"sections", sections}, {"provenance", provenance(options)}};
}

Json family_report(const AnyFamily& family, const ReportOptions& options) {
  Json descriptors = Json::array();
  bool all = true;
  for (const auto& r : family.check_catalog(options.budget)) {
    Json verdicts = Json::array();
    for (std::size_t i = 0; i < r.verdicts.size(); ++i) verdicts.push_back(verdict_json(r.verdicts[i], r.confirmed[i]));
    Json params = Json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    descriptors.push_back({{"name", r.name}, {"parameters", params}, {"matches", r.matches()}, {"verdicts", verdicts}});
    all = all && r.matches();
  }
  Json sections{{"catalog", descriptors}};
  const auto density = family.density_checks(options.budget);
  if (!density.empty()) {
    Json rows = Json::array();
    for (const auto& d : density) {
      all = all && d.refuted;
      rows.push_back({{"target", d.target},
                      {"refuted", d.refuted},
                      {"finite_subsets_checked", d.finite_subsets_checked},
                      {"upper_bounds_checked", d.upper_bounds_checked}});
    }
    sections["join_density"] = rows;
  }
  return {{"subject", family.id()},
          {"description", family.description()},
          {"claims_match", all},
          {"sections", sections},
          {"provenance", provenance(options)}};
}

Json represent_report(const Representation& h, const ReportOptions& options) {
  Json out = representation_to_json(h);
  out["verification"] = verify_json(h, options).json;
  out["provenance"] = provenance(options);
  return out;
}

Json represent_report(const FiniteLattice& lattice, const ReportOptions& options) {
  return represent_report(represent(lattice), options);
}

Json theory_report(const TwoSortedStructure& m, const std::string& subject, const ReportOptions& options) {
  TheoryOptions to;
  to.seed = options.seed;
  const auto r = check_theory(m, to);
  Json axioms = Json::array();
  for (const auto& v : r.axioms) {
    Json row{{"axiom", std::string(axiom_name(v.axiom))},
             {"holds", v.holds},
             {"exhaustive", v.exhaustive},
             {"checked", v.checked}};
    if (!v.elements.empty()) {
      Json w = Json::array();
      for (const Element e : v.elements) w.push_back(m.lsort.label(e));
      row["witness"] = w;
    }
    if (!v.sets.empty()) row["witness_sets"] = v.sets;
    axioms.push_back(row);
  }
  Json pc = Json::array();
  for (const auto& s : r.complete_prime_sets) pc.push_back(labels_of(m.lsort, s));
  return {{"subject", subject},
          {"size", m.lsort.size()},
          {"ssort_size", m.ssort.size()},
          {"all_hold", r.ok()},
          {"sections", {{"axioms", axioms}, {"complete_prime_sets", pc}}},
          {"provenance", provenance(options)}};
}

Json ultra_report(const FiniteLattice& l, std::size_t index_size, std::size_t principal, const std::string& subject,
                  const ReportOptions& options) {
  const Ultrapower p(l, UltrafilterOnFiniteIndex::principal(index_size, principal));
  const bool exhaustive = l.size() <= options.cap;
  std::mt19937_64 rng(options.seed);
  std::size_t checked = 0, inf_fail = 0, star_fail = 0;
  Json first_failure;
  auto visit = [&](const ElementSet& s) {
    ++checked;
    const auto r = verify_inf_exist(p, s);
    if (!r.holds) ++inf_fail;
    if (p.lower_star(p.star_set(s)) != s) ++star_fail;
    if ((!r.holds || p.lower_star(p.star_set(s)) != s) && first_failure.is_null()) first_failure = labels_of(l, s);
  };
  if (exhaustive) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l.size()); ++mask) visit(ElementSet(l.size(), mask));
  } else {
    std::bernoulli_distribution coin(0.5);
    for (std::size_t k = 0; k < options.samples; ++k) {
      ElementSet s(l.size());
      for (std::size_t i = 0; i < l.size(); ++i) s[i] = coin(rng);
      visit(s);
    }
  }
  const bool iso = evaluation_is_isomorphism(p);
  Json dist = Json::object();
  bool dist_ok = true;
  if (l.size() <= 24) {
    const auto d = verify_dist_root(p);
    dist = {{"holds", d.holds}, {"base", d.base_distributive}, {"ultrapower", d.power_distributive}};
    dist_ok = d.holds;
  }
  Json sections{{"ultrapower", {{"classes", p.lattice().size()}, {"materialized", p.materialized()},
                                {"isomorphic_by_evaluation", iso}}},
                {"inf_exist", {{"holds", inf_fail == 0}, {"exhaustive", exhaustive}, {"subsets_checked", checked},
                               {"failures", inf_fail}}},
                {"star_roundtrip", {{"holds", star_fail == 0}, {"failures", star_fail}}},
                {"dist_root", dist}};
  if (!first_failure.is_null()) sections["first_failure"] = first_failure;
  return {{"subject", subject},
          {"index_size", index_size},
          {"principal", principal},
          {"all_hold", iso && inf_fail == 0 && star_fail == 0 && dist_ok},
          {"sections", sections},
          {"provenance", provenance(options)}};
}

namespace {

bool is_scalar_list(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string inline_list(const Json& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + scalar(v[i]);
  return out + "]";
}

void render(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive()) {
        out << pad << k << ": " << scalar(v) << "\n";
      } else if (is_scalar_list(v)) {
        out << pad << k << ": " << inline_list(v) << "\n";
      } else {
        out << pad << k << ":\n";
        render(out, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive() || is_scalar_list(v)) {
        out << pad << "- " << (v.is_primitive() ? scalar(v) : inline_list(v)) << "\n";
      } else {
        out << pad << "-\n";
        render(out, v, indent + 2);
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(out, report, 0);
  return out.str();
}

}  // namespace latrepr
