"""Joint input/output placement and the decoupled baseline.

The joint solver builds a ``2n x 2n`` weighted bipartite graph over state
columns plus inputs (left) and state rows plus outputs (right):

    state -> state   weight 3   (the dynamics pattern)
    input k -> x_k   weight 1
    x_k -> output k  weight 1
    input k -> output k  weight 2   (both left unused)

and reads the placement off a maximum-weight maximum matching.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .errors import InputError, PreconditionError
from .matching import Matching, maximum_matching, mwmm
from .structure import (
    StructuralMatrix,
    WeightedBipartiteGraph,
    bipartite_of,
    digraph_of,
    is_strongly_connected,
)

log = logging.getLogger(__name__)

DYNAMICS_WEIGHT = 3
PAIRING_WEIGHT = 2
DEDICATED_WEIGHT = 1

FALLBACK_STATE = 1


@dataclass(frozen=True)
class Placement:
    """Dedicated inputs on states ``inputs`` and dedicated outputs on ``outputs``."""

    n: int
    inputs: frozenset[int] = field(default_factory=frozenset)
    outputs: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "inputs", frozenset(self.inputs))
        object.__setattr__(self, "outputs", frozenset(self.outputs))
        for k in self.inputs | self.outputs:
            if not 1 <= k <= self.n:
                raise InputError(f"placement index {k} outside 1..{self.n}")

    def cost(self) -> int:
        return len(self.inputs | self.outputs)


def build_D(a: StructuralMatrix) -> WeightedBipartiteGraph:  # noqa: N802
    """Weighted bipartite graph of the joint construction (``stars + 3n`` edges)."""
    n = a.n
    edges = [(c, r, DYNAMICS_WEIGHT) for r, c in a.stars]
    for k in range(1, n + 1):
        edges.append((n + k, k, DEDICATED_WEIGHT))
        edges.append((k, n + k, DEDICATED_WEIGHT))
        edges.append((n + k, n + k, PAIRING_WEIGHT))
    return WeightedBipartiteGraph(2 * n, 2 * n, tuple(edges))


def _require_strongly_connected(a: StructuralMatrix, allow_disconnected: bool) -> None:
    if is_strongly_connected(digraph_of(a)):
        return
    if not allow_disconnected:
        raise PreconditionError("the network digraph is not strongly connected")
    log.warning("network is not strongly connected; result not guaranteed minimal/valid")


def low_index_preference(n: int) -> dict[tuple[int, int], int]:
    """Tie-break favouring placements with the smallest sum of state indices.

    Pairing input k with output k means state k gets neither, so rewarding
    that pair by ``k`` pushes equal-cost placements toward low indices.
    """
    return {(n + k, n + k): k for k in range(1, n + 1)}


def joint_matching(a: StructuralMatrix) -> Matching:
    """The MWMM of :func:`build_D` for ``a`` (low-index tie-break)."""
    return mwmm(build_D(a), tie_break=low_index_preference(a.n))


def placement_from_matching(n: int, m: Matching) -> Placement:
    """Read inputs/outputs off a matching of the joint graph, applying the fallback.

    Raises:
        AssertionError: the matching pairs an input with x_k but not x_k with
            its output (or vice versa). Cannot happen for a perfect matching.
    """
    inputs = frozenset(v for u, v in m.pairs if u > n and v <= n)
    outputs = frozenset(u for u, v in m.pairs if u <= n and v > n)
    if inputs != outputs:
        raise AssertionError(
            f"joint structure violated: inputs {sorted(inputs)} != outputs {sorted(outputs)}"
        )
    if not inputs:
        inputs = outputs = frozenset({FALLBACK_STATE})
    return Placement(n, inputs, outputs)


def solve_joint_placement(
    a: StructuralMatrix, *, allow_disconnected: bool = False
) -> Placement:
    """Minimum ``|I u J|`` dedicated placement making ``a`` structurally
    controllable and observable.

    Raises:
        InputError: ``a`` is not square.
        PreconditionError: the digraph of ``a`` is not strongly connected and
            ``allow_disconnected`` is false.
    """
    n = a.n
    _require_strongly_connected(a, allow_disconnected)
    m = joint_matching(a)
    if m.size != 2 * n:
        raise AssertionError(f"joint matching has {m.size} pairs, expected {2 * n}")
    return placement_from_matching(n, m)


def baseline_decoupled_placement(
    a: StructuralMatrix,
    matching: Matching | None = None,
    *,
    allow_disconnected: bool = False,
) -> Placement:
    """Decoupled design from one maximum matching of the dynamics pattern.

    Inputs go on states whose row is unmatched, outputs on states whose column
    is unmatched. Each set is minimum on its own; their union is not optimised.
    Pass ``matching`` to replay a specific maximum matching (left = source
    state, right = target state).
    """
    n = a.n
    _require_strongly_connected(a, allow_disconnected)
    b = bipartite_of(a)
    if matching is None:
        matching = maximum_matching(b)
    else:
        edges = {(u, v) for u, v, _ in b.edges}
        bad = sorted(matching.pairs - edges)
        if bad:
            raise InputError(f"replayed matching uses non-edges {bad}")
        if matching.size != maximum_matching(b).size:
            raise InputError("replayed matching is not maximum")
    everything = frozenset(range(1, n + 1))
    inputs = everything - matching.matched_right()
    outputs = everything - matching.matched_left()
    if not inputs:
        inputs = outputs = frozenset({FALLBACK_STATE})
    return Placement(n, inputs, outputs)
