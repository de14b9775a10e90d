"""Exit criteria. One test per criterion; the terminal summary prints PASS/FAIL lines.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import random
import statistics
import time
from collections import Counter

import pytest

from jointsel.bench import loglog_slope, median_time, run_bench
from jointsel.matching import Matching, max_weight_perfect_matching, maximum_matching
from jointsel.oracle import brute_force_min_joint, brute_force_min_joint_pairs
from jointsel.selection import (
    Placement,
    baseline_decoupled_placement,
    joint_matching,
    solve_joint_placement,
)
from jointsel.structure import WeightedBipartiteGraph, structural_from_edge_list
from jointsel.verification import (
    check_placement,
    is_structurally_controllable,
    is_structurally_observable,
)

from conftest import PAPER_BASELINE_MATCHINGS, random_instance_batch
from oracles import (
    best_permutation,
    max_matching_size_exhaustive,
    random_bipartite_edges,
    random_weight_table,
)

RANDOM_INSTANCES = 200
ORACLE_BUDGET_S = 60.0
EXAMPLE1_BUDGET_S = 0.050
BENCH_SIZES = (100, 200, 400)
BENCH_PER_SIZE = 5
BENCH_DENSITY = 0.05
MAX_SLOPE = 3.5
N400_BUDGET_S = 30.0


def _both(a, p: Placement) -> bool:
    return check_placement(a, p).ok


@pytest.fixture(scope="module")
def batch():
    instances = random_instance_batch(RANDOM_INSTANCES, seed=2024, n_range=(2, 8))
    assert {a.n for a in instances} == set(range(2, 9))
    return instances


@pytest.fixture(scope="module")
def solved(batch):
    t0 = time.perf_counter()
    rows = []
    for a in batch:
        p = solve_joint_placement(a)
        cost, _ = brute_force_min_joint(a)
        rows.append((a, p, cost))
    return rows, time.perf_counter() - t0


def test_ac01_example1_golden(example1):
    """Example 1: I = J = {1}, cost 1, verified, solve < 50 ms."""
    t0 = time.perf_counter()
    p = solve_joint_placement(example1)
    elapsed = time.perf_counter() - t0
    assert p.inputs == p.outputs == {1}
    assert p.cost() == 1
    assert _both(example1, p)
    assert elapsed < EXAMPLE1_BUDGET_S


def test_ac02_example2_golden(a1):
    """Example 2: cost 4 with I = J, verified, oracle 4, paper placement {6,7,8,10} verifies at cost 4."""
    p = solve_joint_placement(a1)
    assert p.cost() == 4 and p.inputs == p.outputs
    assert _both(a1, p)
    assert brute_force_min_joint(a1)[0] == 4
    paper = frozenset({6, 7, 8, 10})
    r = check_placement(a1, Placement(10, paper, paper))
    assert r.ok and r.cost == 4


def test_ac03_example3_golden(a2):
    """Example 3: singleton I = J, cost 1, oracle 1; paper {2} and decoupled ({6},{8}) verify at 1 and 2."""
    p = solve_joint_placement(a2)
    assert p.cost() == 1 and p.inputs == p.outputs and len(p.inputs) == 1
    assert brute_force_min_joint(a2)[0] == 1
    r = check_placement(a2, Placement(10, frozenset({2}), frozenset({2})))
    assert r.ok and r.cost == 1
    r = check_placement(a2, Placement(10, frozenset({6}), frozenset({8})))
    assert r.ok and r.cost == 2


def test_ac04_oracle_equivalence(solved):
    """Joint cost equals brute-force minimum on 200 random instances (n 2..8), under 60 s."""
    rows, elapsed = solved
    mismatches = [(a, p.cost(), c) for a, p, c in rows if p.cost() != c]
    print(f"\ncost histogram {sorted(Counter(c for _, _, c in rows).items())}, {elapsed:.1f} s")
    assert len(rows) >= RANDOM_INSTANCES
    assert mismatches == []
    assert elapsed < ORACLE_BUDGET_S


def test_ac05_lemma_verification(solved):
    """Every solver output on the 200 instances is structurally controllable and observable."""
    rows, _ = solved
    failures = [
        a for a, p, _ in rows
        if not (is_structurally_controllable(a, p.inputs) and is_structurally_observable(a, p.outputs))
    ]
    assert failures == []


def test_ac06_joint_structure(solved, example1, a1, a2):
    """I = J on every output and the joint MWMM has exactly 2n pairs (200 instances + goldens)."""
    instances = [a for a, _, _ in solved[0]] + [example1, a1, a2]
    for a in instances:
        assert joint_matching(a).size == 2 * a.n
        p = solve_joint_placement(a)
        assert p.inputs == p.outputs


def test_ac07_baseline_dominance(solved, a1, a2):
    """Baseline cost >= joint cost on all 200; strictly greater on replayed paper matchings."""
    for a, p, _ in solved[0]:
        assert baseline_decoupled_placement(a).cost() >= p.cost()
    strict = []
    for name, a in (("a1", a1), ("a2", a2)):
        replay = Matching(frozenset(PAPER_BASELINE_MATCHINGS[name]))
        strict.append(baseline_decoupled_placement(a, replay).cost() > solve_joint_placement(a).cost())
    assert any(strict)


def test_ac08_matching_kernels_vs_brute_force():
    """500 random instances (sides <= 7): Hopcroft-Karp size and Hungarian weight match brute force."""
    rng = random.Random(8)
    card_mismatch = weight_mismatch = 0
    for _ in range(500):
        nl, nr = rng.randint(1, 7), rng.randint(1, 7)
        edges = random_bipartite_edges(rng, nl, nr, rng.uniform(0.1, 0.7))
        b = WeightedBipartiteGraph(nl, nr, tuple((u, v, rng.randint(1, 3)) for u, v in edges))
        card_mismatch += maximum_matching(b).size != max_matching_size_exhaustive(nl, nr, edges)

        k = rng.randint(2, 7)
        table = random_weight_table(rng, k, rng.uniform(0.0, 0.7))
        weight_mismatch += max_weight_perfect_matching(table).total_weight != best_permutation(table)
    assert (card_mismatch, weight_mismatch) == (0, 0)


def test_ac09_oracle_self_consistency():
    """Subset oracle equals pair-enumeration oracle on 50 random instances with n <= 5."""
    instances = random_instance_batch(50, seed=99, n_range=(1, 5))
    assert all(brute_force_min_joint(a)[0] == brute_force_min_joint_pairs(a) for a in instances)


def test_ac10_scaling():
    """n in {100,200,400}, density 0.05, 5 each: log-log slope <= 3.5 and n=400 median < 30 s."""
    rows = run_bench(BENCH_SIZES, BENCH_PER_SIZE, seed=0, density=BENCH_DENSITY)
    slope = loglog_slope(rows)
    medians = {n: median_time(rows, n) for n in BENCH_SIZES}
    print(f"\nmedian seconds {medians}, slope {slope:.2f}")
    assert slope <= MAX_SLOPE
    assert medians[400] < N400_BUDGET_S
    assert statistics.median(r.cost for r in rows) >= 1


def test_ac11_fallback_path():
    """Directed 3-cycle fires the fallback: I = J = {1}, cost 1, oracle 1."""
    a = structural_from_edge_list(3, [(1, 2), (2, 3), (3, 1)])
    m = joint_matching(a)
    assert all(u <= 3 and v <= 3 for u, v in m.pairs if u <= 3)  # no state feeds an output
    p = solve_joint_placement(a)
    assert p.inputs == p.outputs == {1} and p.cost() == 1
    assert brute_force_min_joint(a)[0] == 1
