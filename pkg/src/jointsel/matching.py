"""Bipartite matching kernels.

* :func:`maximum_matching` -- Hopcroft-Karp, cardinality only.
* :func:`max_weight_perfect_matching` -- Hungarian (Kuhn-Munkres) on a square
  integer table, with forbidden cells.
* :func:`mwmm` -- maximum weight among maximum-cardinality matchings, by
  reduction to the Hungarian kernel.

All arithmetic is integer. Scan order is ascending index order everywhere, so
results are reproducible run to run.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import InfeasibleError, InputError
from .structure import Edge, WeightedBipartiteGraph


@dataclass(frozen=True)
class Matching:
    """A set of 1-based ``(left, right)`` pairs with pairwise-disjoint endpoints."""

    pairs: frozenset[Edge]
    total_weight: int = 0

    def __post_init__(self) -> None:
        pairs = frozenset(self.pairs)
        object.__setattr__(self, "pairs", pairs)
        lefts = {u for u, _ in pairs}
        rights = {v for _, v in pairs}
        if len(lefts) != len(pairs) or len(rights) != len(pairs):
            raise ValueError("matching pairs share an endpoint")

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def size(self) -> int:
        return len(self.pairs)

    def sorted_pairs(self) -> list[Edge]:
        return sorted(self.pairs)

    def matched_left(self) -> set[int]:
        return {u for u, _ in self.pairs}

    def matched_right(self) -> set[int]:
        return {v for _, v in self.pairs}


def _weighted(b: WeightedBipartiteGraph, pairs: Sequence[Edge]) -> Matching:
    w = b.weight_of()
    return Matching(frozenset(pairs), sum(w[p] for p in pairs))


def maximum_matching(b: WeightedBipartiteGraph) -> Matching:
    """Maximum-cardinality matching by Hopcroft-Karp. Weights are ignored for
    selection but reported in ``total_weight``."""
    adj = b.adjacency()
    n_left, n_right = b.n_left, b.n_right
    match_l = [0] * (n_left + 1)
    match_r = [0] * (n_right + 1)
    inf = n_left + n_right + 2
    dist = [inf] * (n_left + 1)

    def bfs() -> bool:
        queue: deque[int] = deque()
        for u in range(1, n_left + 1):
            if match_l[u] == 0:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w == 0:
                    found = True
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def augment(root: int) -> bool:
        # Iterative layered DFS; `ptr` remembers how far each node's adjacency was scanned.
        path = [root]
        while path:
            u = path[-1]
            advanced = False
            while ptr[u] < len(adj[u]):
                v = adj[u][ptr[u]]
                ptr[u] += 1
                w = match_r[v]
                if w == 0:
                    # Flip the alternating path ending at the free right node v.
                    for depth in range(len(path) - 1, -1, -1):
                        x = path[depth]
                        prev = match_l[x]
                        match_l[x] = v
                        match_r[v] = x
                        v = prev
                    return True
                if dist[w] == dist[u] + 1:
                    path.append(w)
                    advanced = True
                    break
            if not advanced:
                dist[u] = inf
                path.pop()
        return False

    while bfs():
        ptr = [0] * (n_left + 1)
        for u in range(1, n_left + 1):
            if match_l[u] == 0:
                augment(u)

    pairs = [(u, match_l[u]) for u in range(1, n_left + 1) if match_l[u]]
    return _weighted(b, pairs)


def _hungarian_min(cost: np.ndarray) -> np.ndarray:
    """Minimum-cost perfect assignment on a square int64 table.

    Shortest augmenting paths with row/column potentials, O(k^3). Returns
    ``col_of_row`` (0-based). The inner column scan is vectorised.
    """
    k = cost.shape[0]
    big = np.iinfo(np.int64).max // 4
    u = np.zeros(k + 1, dtype=np.int64)
    v = np.zeros(k + 1, dtype=np.int64)
    p = np.zeros(k + 1, dtype=np.int64)  # p[j] = row assigned to column j (1-based, 0 = free)
    way = np.zeros(k + 1, dtype=np.int64)
    # Row 0 / column 0 act as the virtual source; pad cost with a zero row/column.
    a = np.zeros((k + 1, k + 1), dtype=np.int64)
    a[1:, 1:] = cost

    for i in range(1, k + 1):
        p[0] = i
        j0 = 0
        minv = np.full(k + 1, big, dtype=np.int64)
        used = np.zeros(k + 1, dtype=bool)
        while True:
            used[j0] = True
            i0 = p[j0]
            free = ~used
            free[0] = False
            cur = a[i0] - u[i0] - v
            better = free & (cur < minv)
            minv[better] = cur[better]
            way[better] = j0
            masked = np.where(free, minv, big)
            j1 = int(np.argmin(masked))
            delta = masked[j1]
            u[p[used]] += delta
            v[used] -= delta
            minv[free] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = int(way[j0])
            p[j0] = p[j1]
            j0 = j1

    col_of_row = np.empty(k, dtype=np.int64)
    col_of_row[p[1:] - 1] = np.arange(k)
    return col_of_row


def _as_table(weights, forbidden) -> tuple[np.ndarray, np.ndarray]:
    rows = list(weights) if not isinstance(weights, np.ndarray) else weights
    k = len(rows)
    table = np.zeros((k, k), dtype=np.int64)
    mask = np.zeros((k, k), dtype=bool)
    for i, row in enumerate(rows):
        row = list(row)
        if len(row) != k:
            raise InputError("weight table must be square")
        for j, w in enumerate(row):
            if w is None:
                mask[i, j] = True
            else:
                if int(w) != w:
                    raise InputError(f"weight at ({i + 1}, {j + 1}) is not an integer")
                table[i, j] = int(w)
    if forbidden is not None:
        extra = np.asarray(forbidden, dtype=bool)
        if extra.shape != (k, k):
            raise InputError("forbidden mask must match the weight table shape")
        mask |= extra
    return table, mask


def max_weight_perfect_matching(
    weights: Sequence[Sequence[int | None]] | np.ndarray,
    forbidden: Sequence[Sequence[bool]] | np.ndarray | None = None,
) -> Matching:
    """Maximum-weight perfect assignment of a ``k x k`` integer table.

    Cells that are ``None`` in ``weights`` or ``True`` in ``forbidden`` are never
    selected. Rows map to left nodes and columns to right nodes, both 1-based.

    Raises:
        InfeasibleError: no perfect assignment avoids the forbidden cells.
    """
    table, mask = _as_table(weights, forbidden)
    k = table.shape[0]
    if k == 0:
        return Matching(frozenset(), 0)
    allowed = table[~mask]
    if allowed.size == 0:
        raise InfeasibleError("left node 1 has no allowed cell")
    hi, lo = int(allowed.max()), int(allowed.min())
    # Any assignment touching a forbidden cell scores below every feasible one.
    sentinel = k * lo - (k - 1) * hi - 1
    value = np.where(mask, sentinel, table)
    col_of_row = _hungarian_min(-value)
    rows = np.arange(k)
    if mask[rows, col_of_row].any():
        raise InfeasibleError(_unmatchable_node(mask))
    pairs = frozenset((int(i) + 1, int(j) + 1) for i, j in zip(rows, col_of_row))
    return Matching(pairs, int(table[rows, col_of_row].sum()))


def _unmatchable_node(mask: np.ndarray) -> str:
    k = mask.shape[0]
    edges = tuple(
        (i + 1, j + 1, 1) for i in range(k) for j in range(k) if not mask[i, j]
    )
    m = maximum_matching(WeightedBipartiteGraph(k, k, edges))
    free_left = sorted(set(range(1, k + 1)) - m.matched_left())
    return f"no perfect assignment over allowed cells; left node {free_left[0]} cannot be matched"


def mwmm(
    b: WeightedBipartiteGraph, tie_break: Mapping[Edge, int] | None = None
) -> Matching:
    """Maximum-weight maximum matching.

    Real edges get value ``w + shift`` on a square padded table, every other cell
    is a zero-value slack assignment. ``shift`` exceeds the largest possible
    weight sum of any matching, so one extra real edge always outweighs any
    reshuffle of weights: cardinality first, weight second.

    ``tie_break`` optionally maps edges to non-negative integers; among all
    maximum-weight maximum matchings the one with the largest tie-break sum is
    returned. It never changes cardinality or ``total_weight``.
    """
    if not b.edges:
        return Matching(frozenset(), 0)
    k = max(b.n_left, b.n_right)
    shift = 1 + b.max_weight * min(b.n_left, b.n_right)
    secondary = dict(tie_break or {})
    if any(t < 0 for t in secondary.values()):
        raise InputError("tie-break values must be non-negative")
    scale = 1 + sum(secondary.values())
    value = np.zeros((k, k), dtype=np.int64)
    for u, v, w in b.edges:
        value[u - 1, v - 1] = (w + shift) * scale + secondary.get((u, v), 0)
    col_of_row = _hungarian_min(-value)
    weight = b.weight_of()
    pairs = [
        (i + 1, int(j) + 1)
        for i, j in enumerate(col_of_row)
        if (i + 1, int(j) + 1) in weight
    ]
    return _weighted(b, pairs)
