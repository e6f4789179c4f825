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

#include "latrepr/representation.hpp"

#include <random>

namespace latrepr {

Representation::Representation(FiniteLattice source, std::vector<ElementSet> base, std::vector<ElementSet> assign)
    : source_(std::move(source)), base_(std::move(base)), assign_(std::move(assign)) {
  if (assign_.size() != source_.size()) throw Error("one image per source element is required");
  for (const auto& img : assign_) {
    if (img.size() != base_.size()) throw Error("image width does not match base size");
  }
  for (const auto& b : base_) {
    if (b.size() != source_.size()) throw Error("base point width does not match source size");
  }
}

Representation represent_from(const FiniteLattice& l, std::span<const FilterRecord> filters) {
  for (std::size_t k = 0; k < filters.size(); ++k) {
    if (!filters[k].flags.is_prime) throw NotPrime(k);
  }
  const auto d = is_distinguishing(l, filters);
  if (!d.distinguishing) throw NotDistinguishing(d.witness->first, d.witness->second);

  std::vector<ElementSet> base;
  base.reserve(filters.size());
  for (const auto& f : filters) base.push_back(f.carrier);
  std::vector<ElementSet> assign(l.size(), ElementSet(filters.size()));
  for (std::size_t k = 0; k < filters.size(); ++k) {
    for_each_member(filters[k].carrier, [&](Element a) { assign[a].set(k); });
  }
  return Representation(l, std::move(base), std::move(assign));
}

Representation represent(const FiniteLattice& l) {
  if (auto triple = distributivity_violation(l)) throw NotRepresentable(*triple);
  return represent_from(l, enumerate_prime_filters(l));
}

InvariantReport check_invariants(const Representation& h) {
  InvariantReport r;
  const auto& l = h.source();
  const auto n = static_cast<Element>(l.size());
  auto note = [&](Element a, Element b) {
    if (!r.witness) r.witness = std::make_pair(a, b);
  };
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      if (a != b && h.assign(a) == h.assign(b)) {
        r.injective = false;
        note(a, b);
      }
      if (h.assign(l.meet(a, b)) != (h.assign(a) & h.assign(b))) {
        r.preserves_meet = false;
        note(a, b);
      }
      if (h.assign(l.join(a, b)) != (h.assign(a) | h.assign(b))) {
        r.preserves_join = false;
        note(a, b);
      }
    }
  }
  ElementSet covered(h.base_size());
  for (Element a = 0; a < n; ++a) covered |= h.assign(a);
  r.irredundant = covered.all();
  r.preserves_bounds = h.assign(l.bottom()).none() && h.assign(l.top()).all();
  if (!r.preserves_bounds) note(l.bottom(), l.top());
  return r;
}

namespace {

struct Walk {
  const Representation& h;
  bool meets;
  CompletenessVerdict verdict;
  ElementSet chosen;

  // Depth-first over include/exclude decisions, carrying the lattice bound of
  // the chosen elements and the combined image.
  bool visit(Element next, Element acc, const ElementSet& combined) {
    const auto& l = h.source();
    if (next == l.size()) {
      ++verdict.subsets_checked;
      if (h.assign(acc) != combined) {
        verdict.holds = false;
        verdict.witness = chosen;
        return false;
      }
      return true;
    }
    if (!visit(next + 1, acc, combined)) return false;
    chosen.set(next);
    const Element acc2 = meets ? l.meet(acc, next) : l.join(acc, next);
    const ElementSet combined2 = meets ? (combined & h.assign(next)) : (combined | h.assign(next));
    const bool ok = visit(next + 1, acc2, combined2);
    chosen.reset(next);
    return ok;
  }
};

bool check_subset(const Representation& h, bool meets, const ElementSet& s) {
  const auto& l = h.source();
  ElementSet combined(h.base_size());
  if (meets) combined.set();
  for_each_member(s, [&](Element a) {
    if (meets) combined &= h.assign(a);
    else combined |= h.assign(a);
  });
  return h.assign(meets ? l.meet_of(s) : l.join_of(s)) == combined;
}

CompletenessVerdict verify_complete(const Representation& h, bool meets, const VerifyOptions& options) {
  const auto& l = h.source();
  if (options.mode == VerifyMode::kExhaustive) {
    if (l.size() > options.cap) throw CarrierTooLarge(l.size(), options.cap);
    Walk walk{h, meets, {}, ElementSet(l.size())};
    ElementSet start(h.base_size());
    if (meets) start.set();
    walk.visit(0, meets ? l.top() : l.bottom(), start);
    return walk.verdict;
  }
  CompletenessVerdict verdict;
  verdict.exhaustive = false;
  std::mt19937_64 rng(options.seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < options.samples; ++i) {
    ElementSet s(l.size());
    for (std::size_t e = 0; e < l.size(); ++e) {
      if (coin(rng)) s.set(e);
    }
    ++verdict.subsets_checked;
    if (!check_subset(h, meets, s)) {
      verdict.holds = false;
      verdict.witness = s;
      break;
    }
  }
  return verdict;
}

}  // namespace

CompletenessVerdict verify_meet_complete(const Representation& h, VerifyOptions options) {
  return verify_complete(h, true, options);
}

CompletenessVerdict verify_join_complete(const Representation& h, VerifyOptions options) {
  return verify_complete(h, false, options);
}

Representation dual_representation(const Representation& h) {
  std::vector<ElementSet> base;
  base.reserve(h.base_size());
  for (const auto& b : h.base()) base.push_back(~b);
  std::vector<ElementSet> assign;
  assign.reserve(h.source().size());
  for (const auto& img : h.images()) assign.push_back(~img);
  return Representation(dual(h.source()), std::move(base), std::move(assign));
}

FilterRecord inverse_image_filter(const Representation& h, std::size_t point) {
  if (point >= h.base_size()) throw IndexOutOfRange(point, h.base_size());
  ElementSet s(h.source().size());
  for (Element a = 0; a < h.source().size(); ++a) {
    if (h.assign(a)[point]) s.set(a);
  }
  return classify_filter(h.source(), s);
}

}  // namespace latrepr
