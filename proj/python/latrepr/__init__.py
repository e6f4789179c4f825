#  Copyright 2026 The latrepr Authors
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.

"""Finite lattices, prime-filter representations and infinite example families.

Report functions return plain dicts; the raw JSON text is available from the
``_core`` extension module.
"""

import json

from . import _core
from ._core import (
    DEFAULT_BUDGET,
    BudgetExhausted,
    CarrierTooLarge,
    CycleDetected,
    Family,
    IndexOutOfRange,
    Lattice,
    LatreprError,
    NotALattice,
    NotRepresentable,
    ParseError,
    UnknownFamily,
    all_lattices,
    are_isomorphic,
    boolean_algebra,
    canonical_extension,
    chain,
    direct_product,
    distributivity_violation,
    dual,
    family_ids,
    is_distributive,
    join_irreducibles,
    m3,
    n5,
    prime_filters,
)

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExhausted",
    "CarrierTooLarge",
    "CycleDetected",
    "Family",
    "IndexOutOfRange",
    "Lattice",
    "LatreprError",
    "NotALattice",
    "NotRepresentable",
    "ParseError",
    "UnknownFamily",
    "all_lattices",
    "are_isomorphic",
    "boolean_algebra",
    "canonical_extension",
    "chain",
    "direct_product",
    "distributivity_violation",
    "dual",
    "family_ids",
    "family_report",
    "is_distributive",
    "join_irreducibles",
    "lattice_report",
    "m3",
    "n5",
    "prime_filters",
    "represent",
    "theory_report",
    "ultra_report",
    "verify_representation",
]


def lattice_report(lattice, subject="lattice", budget=DEFAULT_BUDGET, cap=20, samples=1000, seed=0):
    return json.loads(_core.lattice_report(lattice, subject, budget, cap, samples, seed))


def represent(lattice, cap=20):
    """Representation over all prime filters; raises NotRepresentable."""
    return json.loads(_core.represent(lattice, cap))


def verify_representation(representation, cap=20):
    """Re-verifies a representation given as a dict or JSON text."""
    text = representation if isinstance(representation, str) else json.dumps(representation)
    return json.loads(_core.verify_representation(text, cap))


def theory_report(structure, cap=20):
    """Two-sorted axioms for a structure dict, or the canonical model of a Lattice."""
    text = structure.to_json() if isinstance(structure, Lattice) else json.dumps(structure)
    return json.loads(_core.theory_report(text, cap))


def ultra_report(lattice, index_size, principal, cap=20):
    return json.loads(_core.ultra_report(lattice, index_size, principal, cap))


def family_report(family_id, budget=DEFAULT_BUDGET):
    return json.loads(Family(family_id).report(budget))
