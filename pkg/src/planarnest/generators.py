"""Deterministic maximal planar graphs: fixtures, Apollonian graphs, stacked
random triangulations and a small polyhedral catalog."""
from __future__ import annotations

import random
from itertools import combinations

from .graph import PlanarGraph

Face = tuple[int, int, int]


def _insert(edges: list[tuple[int, int]], faces: list[Face], at: int, v: int) -> None:
    """Put vertex ``v`` inside ``faces[at]`` and split that face into three."""
    a, b, c = faces[at]
    edges.extend([(a, v), (b, v), (c, v)])
    faces[at : at + 1] = [(a, b, v), (a, c, v), (b, c, v)]


def _k4() -> tuple[list[tuple[int, int]], list[Face]]:
    return list(combinations(range(4), 2)), [(0, 1, 3), (0, 2, 3), (1, 2, 3)]


def apollonian_faces(gen: int) -> tuple[PlanarGraph, list[Face]]:
    """Apollonian graph plus its current list of internal faces.

    The outer face ``(0, 1, 2)`` of the starting tetrahedron is never
    subdivided, so after generation ``g`` there are ``3**g`` internal faces.
    """
    if gen < 1:
        raise ValueError(f"generation must be >= 1, got {gen}")
    edges, faces = _k4()
    n = 4
    for _ in range(gen - 1):
        new_faces: list[Face] = []
        for a, b, c in faces:
            edges.extend([(a, n), (b, n), (c, n)])
            new_faces.extend([(a, b, n), (a, c, n), (b, c, n)])
            n += 1
        faces = new_faces
    return PlanarGraph.from_edges(edges, n=n), faces


def apollonian(gen: int) -> PlanarGraph:
    return apollonian_faces(gen)[0]


def two_bubble_example() -> PlanarGraph:
    """A tetrahedron and an octahedron glued along the triangle ``a c d``.

    ``b`` sits alone inside ``a c d``; ``e f g`` make up the octahedron's far
    side (antipodal pairs a/e, c/f, d/g). ``a c d`` is the only separating
    triangle, so the graph splits into exactly two bubbles.
    """
    labels = list("abcdefg")
    ix = {s: i for i, s in enumerate(labels)}
    tetra = [p for p in combinations("abcd", 2)]
    antipodes = {frozenset("ae"), frozenset("cf"), frozenset("dg")}
    octa = [p for p in combinations("acdefg", 2) if frozenset(p) not in antipodes]
    pairs = {tuple(sorted(p)) for p in tetra + octa}
    edges = [(ix[a], ix[b]) for a, b in sorted(pairs)]
    return PlanarGraph.from_edges(edges, labels=labels)


def equal_split_example(side: int = 5) -> PlanarGraph:
    """Two stacked fans of ``side`` vertices on either side of triangle 0 1 2.

    Removing ``(0, 1, 2)`` leaves two components of equal order, so the
    interior of that triangle is decided by the tie-break policy.
    """
    if side < 1:
        raise ValueError("side must be >= 1")
    edges = [(0, 1), (0, 2), (1, 2)]
    n = 3
    for _ in range(2):
        hub = n
        edges.extend([(0, hub), (1, hub), (2, hub)])
        n += 1
        prev = hub
        for _ in range(side - 1):
            edges.extend([(0, n), (1, n), (prev, n)])
            prev = n
            n += 1
    return PlanarGraph.from_edges(edges, n=n)


def random_triangulation(n: int, seed: int) -> PlanarGraph:
    """Stacked triangulation: start from K4 and insert vertices into
    uniformly chosen faces until there are ``n`` vertices."""
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    rng = random.Random(seed)
    edges, faces = _k4()
    faces.append((0, 1, 2))
    for v in range(4, n):
        _insert(edges, faces, rng.randrange(len(faces)), v)
    return PlanarGraph.from_edges(edges, n=n)


_OCTAHEDRON = [p for p in combinations(range(6), 2) if p not in {(0, 5), (1, 4), (2, 3)}]

# top vertex 0, upper ring 1..5, lower ring 6..10, bottom vertex 11
_ICOSAHEDRON = (
    [(0, i) for i in range(1, 6)]
    + [(i, i % 5 + 1) for i in range(1, 6)]
    + [(i, i + 5) for i in range(1, 6)]
    + [(i, (i % 5) + 6) for i in range(1, 6)]
    + [(i, i % 5 + 6) for i in range(6, 11)]
    + [(11, i) for i in range(6, 11)]
)

CATALOG = {
    "k4": (4, list(combinations(range(4), 2))),
    "octahedron": (6, _OCTAHEDRON),
    "icosahedron": (12, _ICOSAHEDRON),
}


def named_graph(name: str) -> PlanarGraph:
    try:
        n, edges = CATALOG[name.lower()]
    except KeyError:
        raise ValueError(
            f"unknown graph {name!r}; choose from {', '.join(sorted(CATALOG))}"
        ) from None
    return PlanarGraph.from_edges(edges, n=n)
