"""Graph container, edge-list parsing and maximal-planarity validation.

Vertices are interned to dense 0-based ids in order of first appearance;
the original labels are kept so every output can be written back in the
caller's vocabulary.
"""
from __future__ import annotations

import io
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence, TextIO

import networkx as nx

Clique3 = tuple[int, int, int]


class GraphError(ValueError):
    """Base class for invalid graph input."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SelfLoopError(ParseError):
    pass


class InvalidCliqueError(GraphError):
    pass


class NotMaximalPlanarError(GraphError):
    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__(report.message)


@dataclass(frozen=True)
class PlanarGraph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable; build them with :meth:`from_edges` or
    :func:`parse_edge_list`.
    """

    adjacency: tuple[frozenset[int], ...]
    labels: tuple[str, ...]
    _masks: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _ids: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.labels) != len(self.adjacency):
            raise GraphError("one label per vertex is required")
        ids = {label: i for i, label in enumerate(self.labels)}
        if len(ids) != len(self.labels):
            raise GraphError("vertex labels must be unique")
        object.__setattr__(self, "_ids", ids)
        object.__setattr__(
            self, "_masks", tuple(to_mask(nbrs) for nbrs in self.adjacency)
        )

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[int, int]],
        n: int | None = None,
        labels: Sequence[str] | None = None,
    ) -> "PlanarGraph":
        """Build a graph from integer edge pairs.

        Duplicate edges collapse; self-loops raise :class:`SelfLoopError`.
        """
        edges = list(edges)
        if n is None:
            n = len(labels) if labels is not None else 1 + max(
                (max(e) for e in edges), default=-1
            )
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        if labels is None:
            labels = [str(i) for i in range(n)]
        return cls(tuple(frozenset(a) for a in adj), tuple(str(s) for s in labels))

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @property
    def masks(self) -> tuple[int, ...]:
        """Adjacency as integer bitsets, bit ``v`` set for each neighbor."""
        return self._masks

    @property
    def label_map(self) -> dict[str, int]:
        return dict(self._ids)

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``, lexicographically."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def id_of(self, label: str) -> int:
        return self._ids[label]

    def label(self, v: int) -> str:
        return self.labels[v]

    def clique_of(self, *labels: str) -> Clique3:
        """Sorted id triple for three vertex labels."""
        a, b, c = sorted(self._ids[s] for s in labels)
        return (a, b, c)

    def vertex_labels(self, vertices: Iterable[int]) -> list[str]:
        return [self.labels[v] for v in sorted(vertices)]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_mask(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


# ---------------------------------------------------------------------------
# Parsing / writing
# ---------------------------------------------------------------------------

def parse_edge_list(text: str | bytes | TextIO) -> PlanarGraph:
    """Parse whitespace-separated edge pairs, one per line.

    ``#`` starts a comment line and blank lines are skipped. Labels are
    interned in order of first appearance.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if isinstance(text, str):
        text = io.StringIO(text)

    ids: dict[str, int] = {}
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 2 tokens, got {len(tokens)}", lineno)
        a, b = tokens
        if a == b:
            raise SelfLoopError(f"self-loop on {a!r}", lineno)
        u = ids.setdefault(a, len(ids))
        v = ids.setdefault(b, len(ids))
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {a} {b}", lineno)
        seen.add(key)
        edges.append(key)
    return PlanarGraph.from_edges(edges, n=len(ids), labels=list(ids))


def format_edge_list(g: PlanarGraph) -> str:
    return "".join(f"{g.labels[u]} {g.labels[v]}\n" for u, v in g.edges())


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ValidationReport:
    is_simple: bool
    is_connected: bool
    edge_count_ok: bool
    is_planar: bool
    message: str

    @property
    def ok(self) -> bool:
        return self.is_simple and self.is_connected and self.edge_count_ok and self.is_planar


def planarity_test(g: PlanarGraph) -> bool:
    """True iff ``g`` admits a plane embedding (left-right planarity test)."""
    planar, _ = nx.check_planarity(g.to_networkx())
    return bool(planar)


def is_connected(g: PlanarGraph) -> bool:
    if g.n == 0:
        return True
    return len(_flood(g, 0, 0)) == g.n


def validate_maximal_planar(g: PlanarGraph) -> ValidationReport:
    problems = []
    simple = all(
        v not in g.adjacency[v] and all(v in g.adjacency[u] for u in g.adjacency[v])
        for v in range(g.n)
    )
    if not simple:
        problems.append("graph has self-loops or asymmetric adjacency")

    connected = is_connected(g)
    if not connected:
        problems.append("graph is disconnected")

    m = g.edge_count
    if g.n < 4:
        count_ok = False
        problems.append(f"need at least 4 vertices, got {g.n}")
    else:
        count_ok = m == 3 * g.n - 6
        if not count_ok:
            problems.append(f"|E|={m} but 3n-6={3 * g.n - 6}")

    planar = planarity_test(g)
    if not planar:
        problems.append("graph is not planar")

    message = "; ".join(problems) if problems else "maximal planar"
    return ValidationReport(simple, connected, count_ok, planar, message)


def require_maximal_planar(g: PlanarGraph) -> None:
    report = validate_maximal_planar(g)
    if not report.ok:
        raise NotMaximalPlanarError(report)


# ---------------------------------------------------------------------------
# Cliques and separation
# ---------------------------------------------------------------------------

def enumerate_3cliques(g: PlanarGraph) -> list[Clique3]:
    """All triangles, each once, sorted lexicographically.

    For every edge ``u < v`` the common neighbours ``w > v`` close a triangle.
    """
    out = []
    for u in range(g.n):
        for v in g.adjacency[u]:
            if v <= u:
                continue
            for w in g.adjacency[u] & g.adjacency[v]:
                if w > v:
                    out.append((u, v, w))
    out.sort()
    return out


def is_clique(g: PlanarGraph, k: Sequence[int]) -> bool:
    if len(k) != 3 or len(set(k)) != 3:
        return False
    if not all(0 <= v < g.n for v in k):
        return False
    return all(g.has_edge(a, b) for a, b in combinations(k, 2))


def _flood(g: PlanarGraph, start: int, blocked: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in seen and not (blocked >> w) & 1:
                seen.add(w)
                queue.append(w)
    return seen


def components_after_removal(g: PlanarGraph, k: Sequence[int]) -> list[frozenset[int]]:
    """Connected components of ``G - k``, ordered by smallest vertex."""
    if not is_clique(g, k):
        raise InvalidCliqueError(f"{tuple(k)} is not a 3-clique of the graph")
    blocked = to_mask(k)
    comps = []
    for v in range(g.n):
        if (blocked >> v) & 1:
            continue
        comp = _flood(g, v, blocked)
        comps.append(frozenset(comp))
        blocked |= to_mask(comp)
    return comps
