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

// latrepr: command-line front end.
//
// Exit codes: 0 clean, 1 usage or parse error, 2 claim mismatch,
// 3 resource cap, 4 lattice not representable.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "latrepr/families.hpp"
#include "latrepr/json_io.hpp"
#include "latrepr/report.hpp"

namespace {

using namespace latrepr;

enum Exit : int { kClean = 0, kUsage = 1, kMismatch = 2, kResource = 3, kNotRepresentable = 4 };

struct Globals {
  std::size_t budget = kDefaultBudget;
  std::size_t cap = 0;  // 0: LATREPR_CAP or the default
  std::uint64_t seed = 0;
  bool json = false;
};

ReportOptions report_options(const Globals& g) {
  ReportOptions o;
  o.budget = g.budget;
  o.seed = g.seed;
  if (g.cap != 0) {
    o.cap = g.cap;
  } else if (const char* env = std::getenv("LATREPR_CAP"); env != nullptr && *env != '\0') {
    try {
      o.cap = std::stoul(env);
    } catch (const std::exception&) {
      throw ParseError("LATREPR_CAP must be a positive integer");
    }
  }
  return o;
}

void emit(const Json& report, const Globals& g) {
  if (g.json) std::cout << report.dump(2) << "\n";
  else std::cout << render_text(report);
}

bool is_family(const std::string& target) {
  const auto ids = family_ids();
  return std::find(ids.begin(), ids.end(), target) != ids.end() && !std::filesystem::exists(target);
}

int run_check(const std::string& target, std::string family, const Globals& g) {
  if (family.empty() && is_family(target)) family = target;
  if (!family.empty()) {
    const Json r = family_report(make_family(family), report_options(g));
    emit(r, g);
    return r.at("claims_match").get<bool>() ? kClean : kMismatch;
  }
  if (target.empty()) throw ParseError("check needs a lattice file or --family");
  emit(lattice_report(lattice_from_json(read_json_file(target)), target, report_options(g)), g);
  return kClean;
}

int run_represent(const std::string& path, bool verify, const Globals& g) {
  const Json in = read_json_file(path);
  const Json r = verify ? represent_report(representation_from_json(in), report_options(g))
                        : represent_report(lattice_from_json(in), report_options(g));
  // Representations are data; always JSON.
  std::cout << r.dump(2) << "\n";
  const Json& v = r.at("verification");
  return v.at("invariants_ok").get<bool>() ? kClean : kMismatch;
}

int run_modelcheck(const std::string& path, const Globals& g) {
  const Json in = read_json_file(path);
  const auto options = report_options(g);
  if (in.contains("ssort")) {
    emit(theory_report(structure_from_json(in), path, options), g);
  } else {
    const auto model = canonical_model(lattice_from_json(in), std::min(options.cap, kCanonicalModelCap));
    emit(theory_report(model, path + " (canonical model)", options), g);
  }
  return kClean;
}

int run_ultra(const std::string& path, std::size_t index, std::size_t principal, const Globals& g) {
  const Json r = ultra_report(lattice_from_json(read_json_file(path)), index, principal, path, report_options(g));
  emit(r, g);
  return r.at("all_hold").get<bool>() ? kClean : kMismatch;
}

int run_truncate(const std::string& family, std::size_t depth) {
  std::cout << lattice_to_json(make_family(family).truncate(depth)).dump(2) << "\n";
  return kClean;
}

int run_families(const Globals& g) {
  Json out = Json::array();
  for (const auto& id : family_ids()) {
    const auto f = make_family(id);
    out.push_back({{"id", id}, {"description", f.description()}, {"bottom", f.bottom()}, {"top", f.top()},
                   {"catalog", f.catalog()}});
  }
  emit(Json{{"families", out}}, g);
  return kClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite lattices, their filters and representations, and infinite example families."};
  app.require_subcommand(1);
  // Global flags may also follow the subcommand.
  app.fallthrough();
  Globals g;
  app.add_option("--budget", g.budget, "Generator instances per family claim")->check(CLI::PositiveNumber);
  app.add_option("--cap", g.cap, "Largest carrier verified over all subsets (overrides LATREPR_CAP)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for sampled checks");
  app.add_flag("--json", g.json, "Emit JSON instead of text");

  std::string target, family;
  auto* check = app.add_subcommand("check", "Classification report for a lattice file or a family catalog");
  check->add_option("target", target, "Lattice JSON file or family id");
  check->add_option("--family", family, "Family id");

  std::string repr_path;
  bool verify = false;
  auto* repr = app.add_subcommand("represent", "Prime-filter representation with verification");
  repr->add_option("path", repr_path, "Lattice JSON file (or representation JSON with --verify)")->required();
  repr->add_flag("--verify", verify, "Re-verify a stored representation");

  std::string mc_path;
  auto* mc = app.add_subcommand("modelcheck", "Check the two-sorted axioms (lattice files use the canonical model)");
  mc->add_option("path", mc_path, "Structure or lattice JSON file")->required();

  std::string ultra_path;
  std::size_t index = 2, principal = 0;
  auto* ultra = app.add_subcommand("ultra", "Ultrapower checks over a principal ultrafilter");
  ultra->add_option("path", ultra_path, "Lattice JSON file")->required();
  ultra->add_option("--index", index, "Size of the index set")->check(CLI::PositiveNumber);
  ultra->add_option("--principal", principal, "Point the ultrafilter is principal at");

  std::string trunc_family;
  std::size_t depth = 3;
  auto* trunc = app.add_subcommand("truncate", "Finite truncation of a family as lattice JSON");
  trunc->add_option("--family", trunc_family, "Family id")->required();
  trunc->add_option("--depth", depth, "Truncation depth")->check(CLI::PositiveNumber);

  auto* fams = app.add_subcommand("families", "List the infinite example families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kClean : kUsage;
  }

  try {
    if (*check) return run_check(target, family, g);
    if (*repr) return run_represent(repr_path, verify, g);
    if (*mc) return run_modelcheck(mc_path, g);
    if (*ultra) return run_ultra(ultra_path, index, principal, g);
    if (*trunc) return run_truncate(trunc_family, depth);
    if (*fams) return run_families(g);
  } catch (const NotRepresentable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotRepresentable;
  } catch (const CarrierTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
