from __future__ import annotations

import random

import pytest

from colorpaths.graph import Coloring, Graph, GraphSpec, cycle, generate

# acceptance tests append (criterion, passed, detail) here; printed in the summary
ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def col(*values: int, chi: int = 3) -> Coloring:
    return Coloring(chi, values)


def random_connected(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(v, rng.randrange(v)) for v in range(1, n)]
    edges += [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_chromatic(seed: int, chi: int, lo: int, hi: int) -> Graph:
    rng = random.Random(seed)
    n = rng.randint(lo, hi)
    if chi >= 4:
        p = rng.choice([0.3, 0.45, 0.6])
    else:
        p = rng.choice([0.1, 0.15, 0.2, 0.3, 0.45])
    # small triangle-free graphs rarely need four colors
    tf = chi == 3 and rng.random() < 0.5
    return generate(GraphSpec("random-chromatic", n=n, chi=chi, p=p, seed=seed, triangle_free=tf))


@pytest.fixture
def c5() -> Graph:
    return cycle(5)


@pytest.fixture
def c7() -> Graph:
    return cycle(7)
