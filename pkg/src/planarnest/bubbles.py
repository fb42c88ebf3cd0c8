"""Bubble decomposition and the bubble hierarchical tree.

A separating clique together with the cliques it covers spans a bubble; the
maximal cliques together span the maximal bubble, which sits under an
imaginary clique enclosing the whole graph. Neighbouring bubbles share
exactly one separating clique, and these shared cliques are the edges of a
single rooted tree.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .graph import (
    Clique3,
    PlanarGraph,
    components_after_removal,
    enumerate_3cliques,
    is_connected,
    planarity_test,
    to_mask,
)
from .hierarchy import (
    DEFAULT_POLICY,
    HierarchyForest,
    InvariantViolation,
    TieBreakPolicy,
    build_forest,
    maximal_elements,
)

IMAGINARY = "imaginary"


class NotABubbleRootError(ValueError):
    pass


class ForeignBubbleError(ValueError):
    """Two bubbles from different analyses were compared."""


@dataclass(frozen=True)
class Bubble:
    """A bubble keyed by its root clique.

    ``root`` is a clique index, or ``None`` for the maximal bubble whose
    root is the imaginary clique. ``id`` is 0 for the maximal bubble and
    ``root + 1`` otherwise, so ids are stable for a given forest.
    """

    id: int
    root: int | None
    cliques: frozenset[int]
    vertices: frozenset[int]
    forest: HierarchyForest = field(repr=False, compare=False)

    @property
    def is_maximal(self) -> bool:
        return self.root is None

    def clique_tuples(self) -> list[Clique3]:
        return sorted(self.forest.cliques[i] for i in self.cliques)

    def edges(self) -> set[tuple[int, int]]:
        out = set()
        for i in self.cliques:
            u, v, w = self.forest.cliques[i]
            out.update({(u, v), (u, w), (v, w)})
        return out


def _make_bubble(h: HierarchyForest, root: int | None, members: Iterable[int]) -> Bubble:
    members = frozenset(members)
    verts = frozenset(v for i in members for v in h.cliques[i])
    bid = 0 if root is None else root + 1
    return Bubble(bid, root, members, verts, h)


def bubble_from_clique(h: HierarchyForest, k_index: int) -> Bubble:
    if not h.children[k_index]:
        raise NotABubbleRootError(
            f"clique {h.cliques[k_index]} covers no other clique and roots no bubble"
        )
    return _make_bubble(h, k_index, (k_index, *h.children[k_index]))


def maximal_bubble(h: HierarchyForest) -> Bubble:
    roots = maximal_elements(h)
    if len(roots) < 2:
        raise InvariantViolation("maximal bubble needs at least two maximal cliques")
    return _make_bubble(h, None, roots)


def all_bubbles(h: HierarchyForest) -> list[Bubble]:
    """The maximal bubble first, then one bubble per separating clique."""
    out = [maximal_bubble(h)]
    out.extend(bubble_from_clique(h, i) for i in range(len(h)) if h.children[i])
    return out


@dataclass(frozen=True)
class BubbleTree:
    """Tree on bubbles rooted at the maximal bubble.

    ``parent`` maps a bubble id to its parent's id (``None`` at the root) and
    ``edge_label`` maps a non-root bubble id to the clique index it shares
    with its parent.
    """

    forest: HierarchyForest
    bubbles: tuple[Bubble, ...]
    parent: dict[int, int | None]
    edge_label: dict[int, int]
    root: int = 0
    _by_id: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_by_id", {b.id: b for b in self.bubbles})

    def bubble(self, bubble_id: int) -> Bubble:
        return self._by_id[bubble_id]

    def edges(self) -> list[tuple[int, int, int]]:
        """``(parent_id, child_id, shared_clique_index)`` in child-id order."""
        return [
            (p, c, self.edge_label[c])
            for c, p in sorted(self.parent.items())
            if p is not None
        ]

    def children(self, bubble_id: int) -> list[int]:
        return sorted(c for c, p in self.parent.items() if p == bubble_id)

    def depth(self, bubble_id: int) -> int:
        d = 0
        while self.parent[bubble_id] is not None:
            bubble_id = self.parent[bubble_id]
            d += 1
        return d

    def undirected_edges(self) -> set[frozenset[frozenset[int]]]:
        """Edges as unordered pairs of bubble vertex sets; policy-independent."""
        by_id = self._by_id
        return {
            frozenset((by_id[p].vertices, by_id[c].vertices)) for p, c, _ in self.edges()
        }


def build_bubble_tree(bubbles: list[Bubble], h: HierarchyForest) -> BubbleTree:
    owners: dict[int, list[int]] = {}
    for b in bubbles:
        if b.forest is not h:
            raise ForeignBubbleError("bubble does not belong to this forest")
        for i in b.cliques:
            owners.setdefault(i, []).append(b.id)

    for i in range(len(h)):
        expected = 2 if h.is_separating(i) else 1
        got = len(owners.get(i, ()))
        if got != expected:
            raise InvariantViolation(
                f"clique {h.cliques[i]} lies in {got} bubbles, expected {expected}"
            )

    parent: dict[int, int | None] = {}
    label: dict[int, int] = {}
    for b in bubbles:
        if b.root is None:
            parent[b.id] = None
            continue
        # the other bubble holding the root clique is the one it hangs from
        (other,) = [o for o in owners[b.root] if o != b.id]
        parent[b.id] = other
        label[b.id] = b.root
    return BubbleTree(h, tuple(bubbles), parent, label)


def decompose(g: PlanarGraph, policy: TieBreakPolicy = DEFAULT_POLICY) -> BubbleTree:
    """Full pipeline: validate, build the forest, the bubbles and their tree."""
    h = build_forest(g, policy=policy)
    return build_bubble_tree(all_bubbles(h), h)


def shared_clique(b1: Bubble, b2: Bubble) -> Clique3 | None:
    if b1.forest is not b2.forest:
        raise ForeignBubbleError("bubbles come from different analyses")
    if b1.id == b2.id:
        return None
    common = b1.cliques & b2.cliques
    if not common:
        return None
    if len(common) > 1:
        raise InvariantViolation(f"bubbles {b1.id} and {b2.id} share {len(common)} cliques")
    (i,) = common
    return b1.forest.cliques[i]


def is_bubble(g: PlanarGraph, vertex_set: Iterable[int]) -> bool:
    """Whether the induced subgraph is maximal planar with no separating triangle."""
    verts = sorted(set(vertex_set))
    m = len(verts)
    if m < 3:
        return False
    pos = {v: i for i, v in enumerate(verts)}
    mask = to_mask(verts)
    edges = [
        (pos[u], pos[v]) for u in verts for v in g.adjacency[u] if u < v and (mask >> v) & 1
    ]
    if len(edges) != 3 * m - 6:
        return False
    sub = PlanarGraph.from_edges(edges, n=m)
    if not is_connected(sub):
        return False
    if not planarity_test(sub):
        return False
    return all(len(components_after_removal(sub, k)) <= 1 for k in enumerate_3cliques(sub))
