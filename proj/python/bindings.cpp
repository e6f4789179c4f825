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

// Python bindings. Reports cross the boundary as JSON text; the package
// wrapper turns them into dicts.

#include <algorithm>
#include <exception>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latrepr/core.hpp"
#include "latrepr/families.hpp"
#include "latrepr/filters.hpp"
#include "latrepr/generate.hpp"
#include "latrepr/irreducibles.hpp"
#include "latrepr/json_io.hpp"
#include "latrepr/report.hpp"

namespace py = pybind11;
using namespace latrepr;

namespace {

ReportOptions options(std::size_t budget, std::size_t cap, std::size_t samples, std::uint64_t seed) {
  ReportOptions o;
  o.budget = budget;
  o.cap = cap;
  o.samples = samples;
  o.seed = seed;
  return o;
}

std::vector<Element> members(const ElementSet& s) {
  std::vector<Element> out;
  for_each_member(s, [&](Element e) { out.push_back(e); });
  return out;
}

FiniteLattice from_covers(std::size_t n, const std::vector<std::pair<Element, Element>>& covers,
                          std::vector<std::string> labels) {
  return FiniteLattice::from_poset(FinitePoset::from_hasse(n, covers, std::move(labels)));
}

void check_element(const FiniteLattice& l, Element e) {
  if (e >= l.size()) throw IndexOutOfRange(e, l.size());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite lattices, prime-filter representations and infinite example families";

  auto base = py::register_exception<Error>(m, "LatreprError", PyExc_ValueError);
  static py::handle parse_error = py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const nlohmann::json::exception& e) {
      py::set_error(parse_error, e.what());
    }
  });
  py::register_exception<UnknownFamily>(m, "UnknownFamily", base);
  py::register_exception<IndexOutOfRange>(m, "IndexOutOfRange", base);
  py::register_exception<NotALattice>(m, "NotALattice", base);
  py::register_exception<CycleDetected>(m, "CycleDetected", base);
  py::register_exception<NotRepresentable>(m, "NotRepresentable", base);
  py::register_exception<CarrierTooLarge>(m, "CarrierTooLarge", base);
  py::register_exception<BudgetExhausted>(m, "BudgetExhausted", base);

  py::class_<FiniteLattice>(m, "Lattice")
      .def(py::init(&from_covers), py::arg("n"), py::arg("covers"),
           py::arg("labels") = std::vector<std::string>{})
      .def_static("from_json", [](const std::string& text) { return lattice_from_json(Json::parse(text)); })
      .def("to_json", [](const FiniteLattice& l) { return lattice_to_json(l).dump(); })
      .def("__len__", &FiniteLattice::size)
      .def_property_readonly("bottom", &FiniteLattice::bottom)
      .def_property_readonly("top", &FiniteLattice::top)
      .def("leq",
           [](const FiniteLattice& l, Element a, Element b) {
             check_element(l, a);
             check_element(l, b);
             return l.leq(a, b);
           })
      .def("meet",
           [](const FiniteLattice& l, Element a, Element b) {
             check_element(l, a);
             check_element(l, b);
             return l.meet(a, b);
           })
      .def("join",
           [](const FiniteLattice& l, Element a, Element b) {
             check_element(l, a);
             check_element(l, b);
             return l.join(a, b);
           })
      .def("label",
           [](const FiniteLattice& l, Element e) {
             check_element(l, e);
             return l.label(e);
           })
      .def("__eq__", [](const FiniteLattice& a, const FiniteLattice& b) { return a == b; })
      .def("__repr__", [](const FiniteLattice& l) { return "<Lattice of " + std::to_string(l.size()) + " elements>"; });

  m.def("chain", &chain, py::arg("n"));
  m.def("boolean_algebra", &boolean_algebra, py::arg("atoms"));
  m.def("m3", &m3);
  m.def("n5", &n5);
  m.def("dual", [](const FiniteLattice& l) { return dual(l); });
  m.def("direct_product", [](const std::vector<FiniteLattice>& factors) { return direct_product(factors); });
  m.def("all_lattices", &all_lattices, py::arg("n"));
  m.def("is_distributive", [](const FiniteLattice& l) { return is_distributive(l); });
  m.def("distributivity_violation", [](const FiniteLattice& l) { return distributivity_violation(l); });
  m.def("are_isomorphic", [](const FiniteLattice& a, const FiniteLattice& b) { return are_isomorphic(a, b); });
  m.def("canonical_extension", &canonical_extension);
  m.def("prime_filters", [](const FiniteLattice& l) {
    std::vector<std::vector<Element>> out;
    for (const auto& f : enumerate_prime_filters(l)) out.push_back(members(f.carrier));
    return out;
  });
  m.def("join_irreducibles", [](const FiniteLattice& l) { return members(irreducibles(l).join_irr); });

  m.def(
      "lattice_report",
      [](const FiniteLattice& l, const std::string& subject, std::size_t budget, std::size_t cap,
         std::size_t samples, std::uint64_t seed) {
        return lattice_report(l, subject, options(budget, cap, samples, seed)).dump();
      },
      py::arg("lattice"), py::arg("subject") = "lattice", py::arg("budget") = kDefaultBudget,
      py::arg("cap") = 20, py::arg("samples") = 1000, py::arg("seed") = 0);
  m.def(
      "represent",
      [](const FiniteLattice& l, std::size_t cap) { return represent_report(l, options(kDefaultBudget, cap, 1000, 0)).dump(); },
      py::arg("lattice"), py::arg("cap") = 20);
  m.def(
      "verify_representation",
      [](const std::string& text, std::size_t cap) {
        return represent_report(representation_from_json(Json::parse(text)), options(kDefaultBudget, cap, 1000, 0))
            .dump();
      },
      py::arg("representation_json"), py::arg("cap") = 20);
  m.def(
      "theory_report",
      [](const std::string& structure_json, std::size_t cap) {
        const Json in = Json::parse(structure_json);
        const auto o = options(kDefaultBudget, cap, 1000, 0);
        if (in.contains("ssort")) return theory_report(structure_from_json(in), "structure", o).dump();
        return theory_report(canonical_model(lattice_from_json(in), std::min(cap, kCanonicalModelCap)),
                             "canonical model", o)
            .dump();
      },
      py::arg("structure_json"), py::arg("cap") = 20);
  m.def(
      "ultra_report",
      [](const FiniteLattice& l, std::size_t index_size, std::size_t principal, std::size_t cap) {
        return ultra_report(l, index_size, principal, "lattice", options(kDefaultBudget, cap, 1000, 0)).dump();
      },
      py::arg("lattice"), py::arg("index_size"), py::arg("principal"), py::arg("cap") = 20);

  py::class_<AnyFamily>(m, "Family")
      .def(py::init([](const std::string& id) { return make_family(id); }), py::arg("id"))
      .def_property_readonly("id", &AnyFamily::id)
      .def_property_readonly("description", &AnyFamily::description)
      .def_property_readonly("bottom", &AnyFamily::bottom)
      .def_property_readonly("top", &AnyFamily::top)
      .def("leq", &AnyFamily::leq)
      .def("meet", &AnyFamily::meet)
      .def("join", &AnyFamily::join)
      .def("normalize", &AnyFamily::normalize)
      .def("truncate", &AnyFamily::truncate, py::arg("depth"))
      .def("catalog", &AnyFamily::catalog)
      .def("contains", &AnyFamily::contains, py::arg("descriptor"), py::arg("element"))
      .def(
          "report",
          [](const AnyFamily& f, std::size_t budget) {
            return family_report(f, options(budget, 20, 1000, 0)).dump();
          },
          py::arg("budget") = kDefaultBudget);
  m.def("family_ids", &family_ids);
  m.attr("DEFAULT_BUDGET") = kDefaultBudget;
}
