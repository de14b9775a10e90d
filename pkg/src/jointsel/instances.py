"""Instance files, report serialization, random instances and DOT export.

Instances are stored as digraph edges ``i -> j`` (1-based), never as star
positions; :func:`~jointsel.structure.structural_from_edge_list` is the only
place the transposition happens.

JSON instance::

    {"n": 3, "edges": [[1, 2], [2, 1]], "name": "optional", "metadata": {}}

Edge-list instance::

    # comment
    3
    1 2
    2 1
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Literal, Mapping

from .errors import InputError
from .selection import Placement
from .structure import Edge, StructuralMatrix, digraph_of, structural_from_edge_list
from .verification import VerificationReport

Format = Literal["json", "edgelist"]
Model = Literal["cycle_plus_random", "bidirectional_spanning"]
Algorithm = Literal["joint", "baseline", "oracle"]

MODELS: tuple[str, ...] = ("cycle_plus_random", "bidirectional_spanning")
FIXTURES: tuple[str, ...] = ("example1", "a1", "a2")


@dataclass
class InstanceDocument:
    n: int
    edges: list[Edge]
    name: str | None = None
    metadata: dict[str, Any] = field(default_factory=dict)

    def matrix(self, *, strict: bool = False) -> StructuralMatrix:
        return structural_from_edge_list(self.n, self.edges, strict=strict)

    @classmethod
    def from_matrix(
        cls, a: StructuralMatrix, name: str | None = None, metadata: Mapping[str, Any] | None = None
    ) -> InstanceDocument:
        return cls(a.n, sorted(digraph_of(a).edges), name, dict(metadata or {}))


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{what} must be an integer, got {value!r}")
    return value


def _parse_json(text: str) -> InstanceDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise InputError("instance JSON must be an object")
    if "n" not in obj:
        raise InputError('instance JSON is missing "n"')
    n = _int(obj["n"], '"n"')
    raw_edges = obj.get("edges", [])
    if not isinstance(raw_edges, list):
        raise InputError('"edges" must be an array')
    edges: list[Edge] = []
    for pos, e in enumerate(raw_edges):
        if not isinstance(e, list) or len(e) != 2:
            raise InputError(f"edges[{pos}] must be a two-element array, got {e!r}")
        edges.append((_int(e[0], f"edges[{pos}][0]"), _int(e[1], f"edges[{pos}][1]")))
    metadata = obj.get("metadata") or {}
    if not isinstance(metadata, dict):
        raise InputError('"metadata" must be an object')
    return InstanceDocument(n, edges, obj.get("name"), metadata)


def _parse_edgelist(text: str) -> InstanceDocument:
    n: int | None = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise InputError(f"line {lineno}: expected integers, got {raw!r}") from None
        if n is None:
            if len(values) != 1:
                raise InputError(f"line {lineno}: first line must hold n alone")
            n = values[0]
        elif len(values) != 2:
            raise InputError(f"line {lineno}: expected 'i j', got {raw!r}")
        else:
            edges.append((values[0], values[1]))
    if n is None:
        raise InputError("edge list is empty: missing n")
    return InstanceDocument(n, edges)


def parse_instance_document(text: str, fmt: Format = "json") -> InstanceDocument:
    if fmt == "json":
        return _parse_json(text)
    if fmt == "edgelist":
        return _parse_edgelist(text)
    raise InputError(f"unknown format {fmt!r}")


def parse_instance(text: str, fmt: Format = "json", *, strict: bool = False) -> StructuralMatrix:
    """Parse an instance file into a square structural matrix.

    Raises:
        InputError: malformed text, out-of-range endpoint, or a duplicate
            edge when ``strict`` is set.
    """
    return parse_instance_document(text, fmt).matrix(strict=strict)


def guess_format(path: str) -> Format:
    return "json" if path.lower().endswith(".json") else "edgelist"


def dump_instance(
    a: StructuralMatrix,
    fmt: Format = "json",
    *,
    name: str | None = None,
    metadata: Mapping[str, Any] | None = None,
) -> str:
    doc = InstanceDocument.from_matrix(a, name, metadata)
    if fmt == "edgelist":
        lines = [f"# {name}"] if name else []
        lines.append(str(doc.n))
        lines.extend(f"{i} {j}" for i, j in doc.edges)
        return "\n".join(lines) + "\n"
    obj: dict[str, Any] = {"n": doc.n, "edges": [list(e) for e in doc.edges]}
    if name is not None:
        obj["name"] = name
    if doc.metadata:
        obj["metadata"] = doc.metadata
    return json.dumps(obj) + "\n"


def parse_placement(text: str, n: int) -> Placement:
    """Read ``{"inputs": [...], "outputs": [...]}``; a solve report also qualifies."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid placement JSON at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise InputError("placement JSON must be an object")
    try:
        inputs = [_int(k, "input index") for k in obj.get("inputs", [])]
        outputs = [_int(k, "output index") for k in obj.get("outputs", [])]
    except TypeError:
        raise InputError('"inputs" and "outputs" must be arrays') from None
    return Placement(n, frozenset(inputs), frozenset(outputs))


def serialize_report(
    report: VerificationReport,
    placement: Placement,
    algorithm: Algorithm = "joint",
    metadata: Mapping[str, Any] | None = None,
) -> str:
    """Byte-stable JSON: fixed key order, sorted index arrays."""
    meta = dict(metadata or {})
    if report.notes:
        meta.setdefault("notes", list(report.notes))
    obj = {
        "n": placement.n,
        "inputs": sorted(placement.inputs),
        "outputs": sorted(placement.outputs),
        "cost": placement.cost(),
        "controllable": report.controllable,
        "observable": report.observable,
        "strongly_connected": report.strongly_connected,
        "algorithm": algorithm,
        "metadata": {k: meta[k] for k in sorted(meta)},
    }
    return json.dumps(obj, indent=2) + "\n"


def random_strongly_connected(
    n: int,
    extra_density: float = 0.1,
    seed: int = 0,
    model: Model = "cycle_plus_random",
) -> StructuralMatrix:
    """Random strongly connected pattern, reproducible from ``(n, extra_density, seed, model)``.

    ``cycle_plus_random`` lays a Hamiltonian cycle through a random permutation
    and adds every other ordered pair with probability ``extra_density``.
    ``bidirectional_spanning`` draws a random spanning tree, adds both
    directions of each tree edge, then adds random bidirectional extras.
    Self-loops may appear among the extras in either model.
    """
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    if not 0.0 <= extra_density <= 1.0:
        raise InputError(f"extra_density must lie in [0, 1], got {extra_density}")
    rng = random.Random(f"{model}:{n}:{extra_density!r}:{seed}")
    edges: set[Edge] = set()
    if model == "cycle_plus_random":
        order = list(range(1, n + 1))
        rng.shuffle(order)
        if n > 1:
            edges.update((order[k], order[(k + 1) % n]) for k in range(n))
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if (i, j) not in edges and rng.random() < extra_density:
                    edges.add((i, j))
    elif model == "bidirectional_spanning":
        order = list(range(1, n + 1))
        rng.shuffle(order)
        for k in range(1, n):
            parent = order[rng.randrange(k)]
            edges.update({(parent, order[k]), (order[k], parent)})
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                if (i, j) not in edges and rng.random() < extra_density:
                    edges.update({(i, j), (j, i)})
    else:
        raise InputError(f"unknown model {model!r}")
    return structural_from_edge_list(n, edges)


def export_dot(a: StructuralMatrix, placement: Placement | None = None, name: str = "G") -> str:
    """DOT digraph: states as circles, inputs/outputs as squares."""
    lines = [f"digraph {name} {{", "  node [shape=circle];"]
    n = a.n
    lines.extend(f"  x{k};" for k in range(1, n + 1))
    lines.extend(f"  x{i} -> x{j};" for i, j in sorted(digraph_of(a).edges))
    if placement is not None:
        for pos, k in enumerate(sorted(placement.inputs), 1):
            lines.append(f"  u{pos} [shape=square];")
            lines.append(f"  u{pos} -> x{k} [color=blue];")
        for pos, k in enumerate(sorted(placement.outputs), 1):
            lines.append(f"  y{pos} [shape=square];")
            lines.append(f"  x{k} -> y{pos} [color=green];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def fixture_text(name: str) -> str:
    """Raw JSON of a bundled instance: ``example1``, ``a1`` or ``a2``."""
    if name not in FIXTURES:
        raise InputError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    return resources.files("jointsel.fixtures").joinpath(f"{name}.json").read_text()


def load_fixture(name: str) -> StructuralMatrix:
    return parse_instance(fixture_text(name), "json")
