from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from jointsel import load_fixture  # noqa: E402
from jointsel.instances import random_strongly_connected  # noqa: E402

FIXTURE_DIR = Path(__file__).resolve().parents[1] / "src" / "jointsel" / "fixtures"

# Maximum matchings of B(A) drawn in the decoupled-design figures, as
# (source state, target state) digraph edges.
PAPER_BASELINE_MATCHINGS = {
    "example1": [(1, 2), (2, 3)],
    "a1": [(1, 9), (10, 1), (2, 3), (3, 7), (5, 4), (8, 5)],
    "a2": [(1, 7), (2, 10), (3, 4), (4, 8), (5, 9), (6, 2), (7, 1), (9, 5), (10, 3)],
}

DENSITIES = (0.0, 0.05, 0.1, 0.2, 0.35)


def random_instance_batch(count: int = 200, seed: int = 2024, n_range=(2, 8)):
    """Deterministic mix of both generator models and several densities."""
    import random

    rng = random.Random(seed)
    batch = []
    for k in range(count):
        n = rng.randint(*n_range)
        model = ("cycle_plus_random", "bidirectional_spanning")[k % 2]
        density = DENSITIES[(k // 2) % len(DENSITIES)]
        batch.append(random_strongly_connected(n, density, seed * 10_000 + k, model))
    return batch


@pytest.fixture(scope="session")
def example1():
    return load_fixture("example1")


@pytest.fixture(scope="session")
def a1():
    return load_fixture("a1")


@pytest.fixture(scope="session")
def a2():
    return load_fixture("a2")


@pytest.fixture(scope="session")
def fixture_dir() -> Path:
    return FIXTURE_DIR


_acceptance: list[tuple[str, str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and (
        report.when == "call" or (report.when == "setup" and report.outcome != "passed")
    ):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _acceptance.append((item.name, report.outcome.upper(), doc))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, doc in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'PASSED' else 'FAIL'}  {name}: {doc}")
