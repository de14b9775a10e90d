"""Minimum joint dedicated input/output selection for strongly connected structured networks."""

from .errors import InfeasibleError, InputError, JointSelError, PreconditionError, SizeLimitError
from .instances import (
    InstanceDocument,
    dump_instance,
    export_dot,
    load_fixture,
    parse_instance,
    parse_placement,
    random_strongly_connected,
    serialize_report,
)
from .matching import Matching, max_weight_perfect_matching, maximum_matching, mwmm
from .oracle import brute_force_min_joint, brute_force_min_joint_pairs, enumerate_maximum_matchings
from .selection import (
    Placement,
    baseline_decoupled_placement,
    build_D,
    joint_matching,
    solve_joint_placement,
)
from .structure import (
    Digraph,
    StructuralMatrix,
    WeightedBipartiteGraph,
    bipartite_of,
    digraph_of,
    is_strongly_connected,
    structural_from_edge_list,
)
from .verification import (
    VerificationReport,
    check_placement,
    is_structurally_controllable,
    is_structurally_observable,
)

__all__ = [
    "Digraph",
    "InfeasibleError",
    "InputError",
    "InstanceDocument",
    "JointSelError",
    "Matching",
    "Placement",
    "PreconditionError",
    "SizeLimitError",
    "StructuralMatrix",
    "VerificationReport",
    "WeightedBipartiteGraph",
    "baseline_decoupled_placement",
    "bipartite_of",
    "brute_force_min_joint",
    "brute_force_min_joint_pairs",
    "build_D",
    "check_placement",
    "digraph_of",
    "dump_instance",
    "enumerate_maximum_matchings",
    "export_dot",
    "is_strongly_connected",
    "is_structurally_controllable",
    "is_structurally_observable",
    "joint_matching",
    "load_fixture",
    "max_weight_perfect_matching",
    "maximum_matching",
    "mwmm",
    "parse_instance",
    "parse_placement",
    "random_strongly_connected",
    "serialize_report",
    "solve_joint_placement",
    "structural_from_edge_list",
]
