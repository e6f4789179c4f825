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

#ifndef LATREPR_REPORT_HPP_
#define LATREPR_REPORT_HPP_

// Deterministic verdict reports shared by the command-line tool and the
// Python module.

#include <cstddef>
#include <cstdint>
#include <string>

#include "latrepr/families.hpp"
#include "latrepr/json_io.hpp"

namespace latrepr {

struct ReportOptions {
  std::size_t budget = kDefaultBudget;
  /// Largest carrier verified over all subsets; sampled above.
  std::size_t cap = 20;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
};

/// Distributivity, irreducibles, filter classification, representation
/// verification and hierarchy placement.
Json lattice_report(const FiniteLattice& lattice, const std::string& subject, const ReportOptions& options = {});

/// Catalog verdicts. "claims_match" is false on any mismatch.
Json family_report(const AnyFamily& family, const ReportOptions& options = {});

/// Representation over all prime filters plus its verification verdicts.
/// Throws NotRepresentable.
Json represent_report(const FiniteLattice& lattice, const ReportOptions& options = {});
/// Re-verifies a stored representation; same layout as represent_report.
Json represent_report(const Representation& h, const ReportOptions& options = {});

Json theory_report(const TwoSortedStructure& m, const std::string& subject, const ReportOptions& options = {});

/// Ultrapower checks for the principal ultrafilter at `principal` on an
/// index set of size `index_size`. "all_hold" summarizes.
Json ultra_report(const FiniteLattice& lattice, std::size_t index_size, std::size_t principal,
                  const std::string& subject, const ReportOptions& options = {});

/// Indented "key: value" text.
std::string render_text(const Json& report);

}  // namespace latrepr

#endif  // LATREPR_REPORT_HPP_
