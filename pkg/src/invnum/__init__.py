"""Inversion numbers of oriented graphs: exact search, tournament algorithms,
bounds, the 1-in-3 SAT reduction and a small-order census."""

from .catalog import (
    abc_tournament,
    augment,
    catalog,
    dijoin,
    directed_cycle,
    lex_product,
    q_tournament,
    second_subdivision,
    subdivision_vertices,
    transitive,
    v_tournament,
)
from .census import (
    CanonicalTournament,
    canonical_code,
    canonical_form,
    census_records,
    critical_tournaments,
    enumerate_tournaments,
    max_inv,
    verify_dijoin_split,
)
from .cycleparams import ParamResult, SizeLimitError, nu, tau, tau_arc
from .digraph import (
    DecyclingFamily,
    InputError,
    OrientedGraph,
    ordering_is_acyclic_for,
    verify_family,
)
from .reduction import (
    CertificationError,
    MonotoneFormula,
    ReductionMap,
    assignment_to_set,
    brute_one_in_three,
    decode,
    encode,
)
from .solver import (
    InvResult,
    SearchTimeout,
    decide_inv_le_k,
    enumerate_decycling_labelings,
    extend_to_tournament,
    family_from_fas,
    family_from_fvs,
    inversion_number,
)
from .tournaments import (
    MergePlan,
    PolarPartition,
    inv1_tournament,
    inv2_tournament,
    merge_orderings,
    polar_partition,
)

__version__ = "0.1.0"

__all__ = [
    "OrientedGraph",
    "DecyclingFamily",
    "InputError",
    "SizeLimitError",
    "SearchTimeout",
    "CertificationError",
    "verify_family",
    "ordering_is_acyclic_for",
    "transitive",
    "directed_cycle",
    "dijoin",
    "lex_product",
    "augment",
    "q_tournament",
    "v_tournament",
    "abc_tournament",
    "second_subdivision",
    "subdivision_vertices",
    "catalog",
    "ParamResult",
    "tau",
    "tau_arc",
    "nu",
    "InvResult",
    "decide_inv_le_k",
    "inversion_number",
    "enumerate_decycling_labelings",
    "family_from_fas",
    "family_from_fvs",
    "extend_to_tournament",
    "inv1_tournament",
    "inv2_tournament",
    "polar_partition",
    "PolarPartition",
    "MergePlan",
    "merge_orderings",
    "MonotoneFormula",
    "ReductionMap",
    "encode",
    "decode",
    "assignment_to_set",
    "brute_one_in_three",
    "CanonicalTournament",
    "canonical_code",
    "canonical_form",
    "enumerate_tournaments",
    "census_records",
    "max_inv",
    "critical_tournaments",
    "verify_dijoin_split",
]
