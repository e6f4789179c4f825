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

#include "latrepr/json_io.hpp"

#include <fstream>
#include <sstream>

namespace latrepr {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t as_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

ElementSet index_set(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of element indices");
  ElementSet s(n);
  for (const auto& e : j) {
    const std::size_t i = as_index(e, what);
    if (i >= n) throw IndexOutOfRange(i, n);
    s.set(i);
  }
  return s;
}

Json index_list(const ElementSet& s) {
  Json out = Json::array();
  for_each_member(s, [&](Element e) { out.push_back(e); });
  return out;
}

}  // namespace

FiniteLattice lattice_from_json(const Json& j) {
  const std::size_t n = as_index(field(j, "n"), "n");
  const Json& covers = field(j, "covers");
  if (!covers.is_array()) throw ParseError("covers must be an array");
  std::vector<std::pair<Element, Element>> pairs;
  for (const auto& c : covers) {
    if (!c.is_array() || c.size() != 2) throw ParseError("each cover must be a pair [lower, upper]");
    pairs.emplace_back(static_cast<Element>(as_index(c[0], "cover")), static_cast<Element>(as_index(c[1], "cover")));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& l = j.at("labels");
    if (!l.is_array() || l.size() != n) throw ParseError("labels must be an array of n strings");
    for (const auto& s : l) {
      if (!s.is_string()) throw ParseError("labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }
  return FiniteLattice::from_poset(FinitePoset::from_hasse(n, pairs, std::move(labels)));
}

Json lattice_to_json(const FiniteLattice& lattice) {
  Json covers = Json::array();
  for (const auto& [a, b] : lattice.poset().covers()) covers.push_back({a, b});
  Json out{{"n", lattice.size()}, {"covers", covers}};
  if (!lattice.poset().labels().empty()) out["labels"] = lattice.poset().labels();
  return out;
}

TwoSortedStructure structure_from_json(const Json& j) {
  TwoSortedStructure m{lattice_from_json(field(j, "lattice")), {}};
  const Json& ssort = field(j, "ssort");
  if (!ssort.is_array()) throw ParseError("ssort must be an array of element lists");
  for (const auto& s : ssort) m.ssort.push_back(index_set(s, m.lsort.size(), "ssort member"));
  return m;
}

Json structure_to_json(const TwoSortedStructure& m) {
  Json ssort = Json::array();
  for (const auto& s : m.ssort) ssort.push_back(index_list(s));
  return {{"lattice", lattice_to_json(m.lsort)}, {"ssort", ssort}};
}

std::string mask_string(const ElementSet& s) {
  std::string out(s.size(), '0');
  for_each_member(s, [&](Element e) { out[e] = '1'; });
  return out;
}

ElementSet parse_mask(std::string_view text) {
  ElementSet s(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') s.set(i);
    else if (text[i] != '0') throw ParseError("mask characters must be 0 or 1");
  }
  return s;
}

Representation representation_from_json(const Json& j) {
  const FiniteLattice l = lattice_from_json(field(j, "lattice"));
  const Json& base = field(j, "base");
  const Json& images = field(j, "images");
  if (!base.is_array() || !images.is_array()) throw ParseError("base and images must be arrays");
  if (images.size() != l.size()) throw ParseError("images must list every element once");
  std::vector<ElementSet> points;
  for (const auto& p : base) points.push_back(index_set(field(p, "filter"), l.size(), "filter"));
  std::vector<ElementSet> assign(l.size());
  std::vector<bool> seen(l.size());
  for (const auto& img : images) {
    const std::size_t e = as_index(field(img, "element"), "element");
    if (e >= l.size()) throw IndexOutOfRange(e, l.size());
    if (seen[e]) throw ParseError("element listed twice in images");
    seen[e] = true;
    const Json& mask = field(img, "mask");
    if (!mask.is_string()) throw ParseError("mask must be a string");
    assign[e] = parse_mask(mask.get<std::string>());
    if (assign[e].size() != points.size()) throw ParseError("mask length differs from the base size");
  }
  return Representation(l, std::move(points), std::move(assign));
}

Json representation_to_json(const Representation& h) {
  Json base = Json::array();
  for (std::size_t x = 0; x < h.base_size(); ++x) {
    base.push_back({{"label", "p" + std::to_string(x)}, {"filter", index_list(h.base()[x])}});
  }
  Json images = Json::array();
  for (Element a = 0; a < h.source().size(); ++a) {
    images.push_back({{"element", a}, {"label", h.source().label(a)}, {"mask", mask_string(h.assign(a))}});
  }
  return {{"lattice", lattice_to_json(h.source())}, {"base", base}, {"images", images}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace latrepr
