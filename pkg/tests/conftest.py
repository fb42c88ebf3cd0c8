from itertools import combinations

import pytest

from planarnest.generators import (
    apollonian,
    equal_split_example,
    named_graph,
    random_triangulation,
    two_bubble_example,
)
from planarnest.graph import PlanarGraph

RANDOM_SIZES = (8, 10, 12)
RANDOM_SEEDS = range(100)


def fixed_graphs() -> list[tuple[str, PlanarGraph]]:
    out = [(name, named_graph(name)) for name in ("k4", "octahedron", "icosahedron")]
    out += [(f"apollonian{g}", apollonian(g)) for g in (1, 2, 3)]
    out += [("two_bubble", two_bubble_example()), ("equal_split", equal_split_example())]
    return out


def random_graphs(sizes=RANDOM_SIZES, seeds=RANDOM_SEEDS):
    for n in sizes:
        for s in seeds:
            yield f"random{n}_{s}", random_triangulation(n, s)


def brute_triangles(g: PlanarGraph) -> list[tuple[int, int, int]]:
    return [
        t for t in combinations(range(g.n), 3)
        if all(g.has_edge(a, b) for a, b in combinations(t, 2))
    ]


@pytest.fixture
def two_bubble():
    return two_bubble_example()


@pytest.fixture
def k4():
    return named_graph("k4")


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
