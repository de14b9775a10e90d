"""Exhaustive ground-truth solvers for small instances.

These are deliberately naive: they enumerate index sets and call the
matching-based certificates, sharing nothing with the joint solver beyond
:func:`maximum_matching`.
"""

from __future__ import annotations

from itertools import combinations

from .errors import SizeLimitError
from .matching import Matching
from .structure import Edge, StructuralMatrix, WeightedBipartiteGraph
from .verification import _controllable, _observable_stacked, _require_sc

DEFAULT_SIZE_LIMIT = 12
PAIRS_SIZE_LIMIT = 8


def _check_size(n: int, limit: int) -> None:
    if n > limit:
        raise SizeLimitError(f"n={n} exceeds the brute-force limit of {limit}")


def brute_force_min_joint(
    a: StructuralMatrix, size_limit: int = DEFAULT_SIZE_LIMIT
) -> tuple[int, frozenset[int]]:
    """Smallest ``U`` with inputs = outputs = ``U`` feasible; lexicographically first witness.

    Searching ``I = J = U`` suffices because feasibility is monotone in both sets.
    """
    n = a.n
    _check_size(n, size_limit)
    _require_sc(a)
    for c in range(1, n + 1):
        for subset in combinations(range(1, n + 1), c):
            if _controllable(a, subset) and _observable_stacked(a, subset):
                return c, frozenset(subset)
    raise AssertionError("full placement must be feasible for a strongly connected network")


def brute_force_min_joint_pairs(
    a: StructuralMatrix, size_limit: int = PAIRS_SIZE_LIMIT
) -> int:
    """Minimum ``|I u J|`` over every pair of index sets, no reduction assumed."""
    n = a.n
    _check_size(n, size_limit)
    _require_sc(a)
    masks = range(1, 1 << n)

    def members(mask: int) -> list[int]:
        return [k + 1 for k in range(n) if mask >> k & 1]

    ctrl = [m for m in masks if _controllable(a, members(m))]
    obs = [m for m in masks if _observable_stacked(a, members(m))]
    return min(bin(i | j).count("1") for i in ctrl for j in obs)


def enumerate_maximum_matchings(
    b: WeightedBipartiteGraph, cap: int = 100_000
) -> tuple[list[Matching], bool]:
    """All maximum-cardinality matchings of ``b``.

    Returns ``(matchings, complete)``; ``complete`` is false when more than
    ``cap`` matchings of the running best size were seen and the list was cut.
    """
    adj = b.adjacency()
    weight = b.weight_of()
    best: list[tuple[Edge, ...]] = []
    best_size = 0
    truncated = False
    used = [False] * (b.n_right + 1)
    chosen: list[Edge] = []

    def rec(u: int) -> None:
        nonlocal best_size, truncated
        if truncated:
            return
        if u > b.n_left:
            size = len(chosen)
            if size > best_size:
                best_size = size
                best.clear()
            if size == best_size:
                if len(best) >= cap:
                    truncated = True
                    return
                best.append(tuple(chosen))
            return
        # Prune: even matching every remaining left node cannot reach the best.
        if len(chosen) + (b.n_left - u + 1) < best_size:
            return
        for v in adj[u]:
            if not used[v]:
                used[v] = True
                chosen.append((u, v))
                rec(u + 1)
                chosen.pop()
                used[v] = False
        rec(u + 1)

    rec(1)
    matchings = [Matching(frozenset(p), sum(weight[e] for e in p)) for p in best]
    return matchings, not truncated
