"""Structural matrices and their digraph / bipartite views.

Indices are 1-based throughout. A structural matrix ``A`` with a star at
``(j, i)`` corresponds to the digraph edge ``i -> j`` (state ``x_i`` drives
``x_j``). The bipartite view puts matrix columns on the left and rows on the
right, so the same star becomes the bipartite edge ``(i, j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError

Edge = tuple[int, int]


@dataclass(frozen=True)
class StructuralMatrix:
    """A {0, *} pattern. ``stars`` holds the 1-based (row, col) free entries."""

    n_rows: int
    n_cols: int
    stars: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n_rows < 1 or self.n_cols < 1:
            raise InputError(f"matrix dimensions must be positive, got {self.n_rows}x{self.n_cols}")
        object.__setattr__(self, "stars", frozenset(self.stars))
        for r, c in self.stars:
            if not (1 <= r <= self.n_rows and 1 <= c <= self.n_cols):
                raise InputError(
                    f"star ({r}, {c}) outside a {self.n_rows}x{self.n_cols} matrix"
                )

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int | None = None) -> StructuralMatrix:
        return cls(n_rows, n_rows if n_cols is None else n_cols, frozenset())

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[object]]) -> StructuralMatrix:
        """Build from a dense row listing; any truthy entry (or ``"*"``) is a star."""
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise InputError("dense matrix must be non-empty")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise InputError("ragged dense matrix")
        stars = {
            (i + 1, j + 1)
            for i, row in enumerate(rows)
            for j, v in enumerate(row)
            if v and v != "0"
        }
        return cls(len(rows), width, frozenset(stars))

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    @property
    def n(self) -> int:
        """Size of a square matrix."""
        if not self.is_square:
            raise InputError(f"expected a square matrix, got {self.n_rows}x{self.n_cols}")
        return self.n_rows

    @property
    def nnz(self) -> int:
        return len(self.stars)

    def transpose(self) -> StructuralMatrix:
        return StructuralMatrix(self.n_cols, self.n_rows, frozenset((c, r) for r, c in self.stars))

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.n_cols for _ in range(self.n_rows)]
        for r, c in self.stars:
            out[r - 1][c - 1] = 1
        return out

    def __str__(self) -> str:
        dense = self.to_dense()
        return "\n".join(" ".join("*" if v else "0" for v in row) for row in dense)


@dataclass(frozen=True)
class Digraph:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", frozenset(self.edges))
        for i, j in self.edges:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise InputError(f"edge {i}->{j} has an endpoint outside 1..{self.n}")

    def successors(self) -> list[list[int]]:
        """Adjacency lists indexed 0..n (slot 0 unused), sorted ascending."""
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for i, j in sorted(self.edges):
            adj[i].append(j)
        return adj


@dataclass(frozen=True)
class WeightedBipartiteGraph:
    """Left nodes ``1..n_left``, right nodes ``1..n_right``; edges ``(left, right, weight)``."""

    n_left: int
    n_right: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        edges = tuple(sorted(set(self.edges)))
        seen: set[Edge] = set()
        for u, v, w in edges:
            if not (1 <= u <= self.n_left and 1 <= v <= self.n_right):
                raise InputError(f"bipartite edge ({u}, {v}) out of range")
            if w <= 0:
                raise InputError(f"bipartite edge ({u}, {v}) has non-positive weight {w}")
            if (u, v) in seen:
                raise InputError(f"parallel bipartite edges at ({u}, {v})")
            seen.add((u, v))
        object.__setattr__(self, "edges", edges)

    def weight_of(self) -> dict[Edge, int]:
        return {(u, v): w for u, v, w in self.edges}

    def adjacency(self) -> list[list[int]]:
        """Right neighbours of every left node, ascending (slot 0 unused)."""
        adj: list[list[int]] = [[] for _ in range(self.n_left + 1)]
        for u, v, _ in self.edges:
            adj[u].append(v)
        return adj

    @property
    def max_weight(self) -> int:
        return max((w for _, _, w in self.edges), default=0)


def structural_from_edge_list(
    n: int, digraph_edges: Iterable[Edge], *, strict: bool = False
) -> StructuralMatrix:
    """Square pattern whose digraph has exactly ``digraph_edges``.

    Edge ``i -> j`` becomes a star at ``(j, i)``. Duplicate edges are collapsed
    unless ``strict`` is set, in which case they raise :class:`InputError`.
    """
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    stars: set[Edge] = set()
    for edge in digraph_edges:
        i, j = edge
        if not (1 <= i <= n and 1 <= j <= n):
            raise InputError(f"edge {i}->{j} has an endpoint outside 1..{n}")
        if (j, i) in stars and strict:
            raise InputError(f"duplicate edge {i}->{j}")
        stars.add((j, i))
    return StructuralMatrix(n, n, frozenset(stars))


def digraph_of(a: StructuralMatrix) -> Digraph:
    n = a.n
    return Digraph(n, frozenset((c, r) for r, c in a.stars))


def bipartite_of(m: StructuralMatrix) -> WeightedBipartiteGraph:
    """Unit-weight bipartite view: left = columns, right = rows."""
    return WeightedBipartiteGraph(m.n_cols, m.n_rows, tuple((c, r, 1) for r, c in m.stars))


def hstack(left: StructuralMatrix, right: StructuralMatrix) -> StructuralMatrix:
    """``[left, right]``: column-wise concatenation."""
    if left.n_rows != right.n_rows:
        raise InputError("hstack needs equal row counts")
    shifted = {(r, c + left.n_cols) for r, c in right.stars}
    return StructuralMatrix(left.n_rows, left.n_cols + right.n_cols, left.stars | shifted)


def vstack(top: StructuralMatrix, bottom: StructuralMatrix) -> StructuralMatrix:
    """``[top; bottom]``: row-wise concatenation."""
    if top.n_cols != bottom.n_cols:
        raise InputError("vstack needs equal column counts")
    shifted = {(r + top.n_rows, c) for r, c in bottom.stars}
    return StructuralMatrix(top.n_rows + bottom.n_rows, top.n_cols, top.stars | shifted)


def _checked_indices(n: int, indices: Iterable[int]) -> list[int]:
    out = sorted(set(indices))
    for k in out:
        if not 1 <= k <= n:
            raise InputError(f"state index {k} outside 1..{n}")
    return out


def dedicated_inputs(n: int, indices: Iterable[int]) -> StructuralMatrix | None:
    """``n x |I|`` input pattern with one single-star column per state in ``I``.

    Returns ``None`` for an empty index set (a matrix needs at least one column).
    """
    idx = _checked_indices(n, indices)
    if not idx:
        return None
    return StructuralMatrix(n, len(idx), frozenset((k, col) for col, k in enumerate(idx, 1)))


def dedicated_outputs(n: int, indices: Iterable[int]) -> StructuralMatrix | None:
    """``|J| x n`` output pattern with one single-star row per state in ``J``."""
    inputs = dedicated_inputs(n, indices)
    return None if inputs is None else inputs.transpose()


def strongly_connected_components(g: Digraph) -> list[list[int]]:
    """Tarjan's algorithm, iterative. Components come out in reverse topological order."""
    adj = g.successors()
    index = [0] * (g.n + 1)  # 0 = unvisited, else discovery order + 1
    low = [0] * (g.n + 1)
    on_stack = [False] * (g.n + 1)
    stack: list[int] = []
    sccs: list[list[int]] = []
    counter = 0

    for root in range(1, g.n + 1):
        if index[root]:
            continue
        work = [(root, 0)]
        while work:
            v, pos = work[-1]
            if pos == 0:
                counter += 1
                index[v] = low[v] = counter
                stack.append(v)
                on_stack[v] = True
            if pos < len(adj[v]):
                work[-1] = (v, pos + 1)
                w = adj[v][pos]
                if not index[w]:
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(sorted(comp))
    return sccs


def is_strongly_connected(g: Digraph) -> bool:
    if g.n == 1:
        return True
    return len(strongly_connected_components(g)) == 1
