import random
from itertools import combinations

import pytest

from nearly_indep.graph_core import Graph


def gnp(n, p, rng):
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])


def brute_alpha(g, k):
    """Largest |S| inducing exactly k edges, by itertools over subsets (None if no such S)."""
    edges = list(g.edges())
    for size in range(g.n, -1, -1):
        for s in combinations(range(g.n), size):
            chosen = set(s)
            if sum(1 for u, v in edges if u in chosen and v in chosen) == k:
                return size
    return None


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


@pytest.fixture
def rng():
    return random.Random(12345)


# Acceptance summary ---------------------------------------------------------

_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): acceptance criterion with a summary line")


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        label = dict(report.user_properties).get("acceptance")
        if label:
            _ACCEPTANCE.append((label, report.outcome, report.duration))


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker and ("acceptance", marker.args[0]) not in item.user_properties:
        item.user_properties.append(("acceptance", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome, duration in _ACCEPTANCE:
        verdict = "PASS" if outcome == "passed" else outcome.upper()
        terminalreporter.write_line(f"{verdict:<7} {label}  ({duration:.1f} s)")
