"""Wall-clock scaling of the joint solver."""

from __future__ import annotations

import csv
import io
import math
import statistics
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .instances import Model, random_strongly_connected
from .selection import solve_joint_placement


@dataclass(frozen=True)
class BenchRow:
    n: int
    instance: int
    seed: int
    edges: int
    cost: int
    wall_time: float


def instance_seed(seed: int, n: int, k: int) -> int:
    return seed * 1_000_003 + n * 1_009 + k


def run_bench(
    sizes: Iterable[int],
    per_size: int = 5,
    seed: int = 0,
    density: float = 0.05,
    model: Model = "cycle_plus_random",
) -> list[BenchRow]:
    """Time :func:`solve_joint_placement` sequentially on generated instances."""
    rows = []
    for n in sizes:
        for k in range(per_size):
            s = instance_seed(seed, n, k)
            a = random_strongly_connected(n, density, s, model)
            t0 = time.perf_counter()
            placement = solve_joint_placement(a)
            elapsed = time.perf_counter() - t0
            rows.append(BenchRow(n, k, s, a.nnz, placement.cost(), elapsed))
    return rows


def loglog_slope(rows: Sequence[BenchRow]) -> float:
    """Least-squares slope of log(median time) against log(n), one point per size."""
    by_n: dict[int, list[float]] = {}
    for r in rows:
        by_n.setdefault(r.n, []).append(r.wall_time)
    if len(by_n) < 2:
        raise ValueError("need at least two sizes to fit a slope")
    xs = [math.log(n) for n in sorted(by_n)]
    ys = [math.log(statistics.median(by_n[n])) for n in sorted(by_n)]
    return statistics.linear_regression(xs, ys).slope


def median_time(rows: Sequence[BenchRow], n: int) -> float:
    return statistics.median(r.wall_time for r in rows if r.n == n)


def to_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "instance", "seed", "edges", "cost", "wall_time"])
    for r in rows:
        writer.writerow([r.n, r.instance, r.seed, r.edges, r.cost, f"{r.wall_time:.6f}"])
    return buf.getvalue()
