"""Matching-based certificates of structural controllability and observability.

For a strongly connected dynamics digraph, ``(A, B)`` with dedicated inputs
is structurally controllable iff at least one input exists and ``B([A, B])``
has a matching covering all ``n`` state rows. Observability is the dual
statement on ``[A; C]`` and the state columns.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import PreconditionError
from .matching import maximum_matching
from .selection import Placement
from .structure import (
    StructuralMatrix,
    bipartite_of,
    dedicated_inputs,
    dedicated_outputs,
    digraph_of,
    hstack,
    is_strongly_connected,
    vstack,
)


@dataclass(frozen=True)
class VerificationReport:
    strongly_connected: bool
    controllable: bool
    observable: bool
    cost: int
    matching_deficiency_inputs: int
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return self.controllable and self.observable


def _require_sc(a: StructuralMatrix) -> None:
    if not is_strongly_connected(digraph_of(a)):
        raise PreconditionError("certificates only apply to strongly connected networks")


def _controllable(a: StructuralMatrix, inputs: Iterable[int]) -> bool:
    b = dedicated_inputs(a.n, inputs)
    if b is None:
        return False
    return maximum_matching(bipartite_of(hstack(a, b))).size == a.n


def _observable_stacked(a: StructuralMatrix, outputs: Iterable[int]) -> bool:
    c = dedicated_outputs(a.n, outputs)
    if c is None:
        return False
    return maximum_matching(bipartite_of(vstack(a, c))).size == a.n


def is_structurally_controllable(a: StructuralMatrix, inputs: Iterable[int]) -> bool:
    _require_sc(a)
    return _controllable(a, inputs)


def is_structurally_observable(a: StructuralMatrix, outputs: Iterable[int]) -> bool:
    """Checked two ways: on ``[A; C]`` directly and as controllability of ``A^T``."""
    _require_sc(a)
    outputs = list(outputs)
    direct = _observable_stacked(a, outputs)
    dual = _controllable(a.transpose(), outputs)
    if direct != dual:
        raise AssertionError(f"observability routes disagree for outputs {sorted(outputs)}")
    return direct


def matching_deficiency(a: StructuralMatrix) -> int:
    """``n`` minus the maximum matching size of ``B(A)``."""
    return a.n - maximum_matching(bipartite_of(a)).size


def check_placement(a: StructuralMatrix, placement: Placement) -> VerificationReport:
    """Certify a placement. Never raises on a failed precondition; records it in ``notes``."""
    notes: list[str] = []
    sc = is_strongly_connected(digraph_of(a))
    if placement.n != a.n:
        notes.append(f"placement is for n={placement.n} but the network has n={a.n}")
        return VerificationReport(sc, False, False, placement.cost(), matching_deficiency(a), tuple(notes))
    if sc:
        ctrl = _controllable(a, placement.inputs)
        obs = is_structurally_observable(a, placement.outputs)
    else:
        ctrl = obs = False
        notes.append("not strongly connected: certificates do not apply")
    if not placement.inputs:
        notes.append("no inputs placed")
    if not placement.outputs:
        notes.append("no outputs placed")
    return VerificationReport(
        strongly_connected=sc,
        controllable=ctrl,
        observable=obs,
        cost=placement.cost(),
        matching_deficiency_inputs=matching_deficiency(a),
        notes=tuple(notes),
    )
