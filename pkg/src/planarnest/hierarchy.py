"""Interior/exterior orientation of 3-cliques and the hierarchical forest.

Every 3-clique of a maximal planar graph either separates the graph into two
pieces or leaves it connected. The smaller piece is the clique's interior;
``closure = clique + interior`` orders the cliques by inclusion, and the
covering relation of that order is a forest whose roots are the maximal
cliques.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .graph import (
    Clique3,
    InvalidCliqueError,
    PlanarGraph,
    components_after_removal,
    enumerate_3cliques,
    from_mask,
    require_maximal_planar,
    to_mask,
)


class InvariantViolation(RuntimeError):
    """Raised when a structural guarantee fails; indicates a bug or bad input."""


class TieBreakPolicy(enum.Enum):
    """Which side becomes the interior when both sides have equal order."""

    SMALLEST_MIN_VERTEX_IN = "min"
    LARGEST_MIN_VERTEX_IN = "max"


DEFAULT_POLICY = TieBreakPolicy.SMALLEST_MIN_VERTEX_IN


@dataclass(frozen=True)
class CliqueOrientation:
    clique: Clique3
    separating: bool
    interior: frozenset[int]
    exterior: frozenset[int]


def orient_clique(
    g: PlanarGraph, k: Sequence[int], policy: TieBreakPolicy = DEFAULT_POLICY
) -> CliqueOrientation:
    comps = components_after_removal(g, k)
    clique = tuple(sorted(k))
    if len(comps) == 1:
        return CliqueOrientation(clique, False, frozenset(), comps[0])
    if len(comps) != 2:
        raise InvariantViolation(
            f"removing {clique} left {len(comps)} components; expected 1 or 2"
        )
    a, b = comps
    if len(a) != len(b):
        small, large = (a, b) if len(a) < len(b) else (b, a)
    else:
        # comps are ordered by smallest vertex, so ``a`` holds the global minimum
        small, large = (a, b) if policy is TieBreakPolicy.SMALLEST_MIN_VERTEX_IN else (b, a)
    return CliqueOrientation(clique, True, small, large)


@dataclass(frozen=True)
class HierarchyForest:
    """The covering forest of the clique order.

    ``parent[i]`` is the index of the clique that covers clique ``i`` (its
    single outgoing edge) or ``None`` for a maximal clique.
    """

    graph: PlanarGraph
    policy: TieBreakPolicy
    cliques: tuple[Clique3, ...]
    orientation: tuple[CliqueOrientation, ...]
    parent: tuple[int | None, ...]
    children: tuple[tuple[int, ...], ...]
    depth: tuple[int, ...]
    roots: tuple[int, ...]
    closure_masks: tuple[int, ...] = field(repr=False)
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {k: i for i, k in enumerate(self.cliques)})

    def __len__(self) -> int:
        return len(self.cliques)

    def index(self, k: Sequence[int]) -> int:
        key = tuple(sorted(k))
        try:
            return self._index[key]
        except KeyError:
            raise InvalidCliqueError(f"{key} is not a 3-clique of the graph") from None

    def is_separating(self, i: int) -> bool:
        return self.orientation[i].separating

    @property
    def separating(self) -> list[int]:
        return [i for i, o in enumerate(self.orientation) if o.separating]

    @property
    def max_depth(self) -> int:
        return max(self.depth, default=0)

    def edges(self) -> list[tuple[int, int]]:
        """``(child, parent)`` pairs, the direction of the covering edges."""
        return [(i, p) for i, p in enumerate(self.parent) if p is not None]


def closure(h: HierarchyForest, k_index: int) -> frozenset[int]:
    """Clique vertices together with the clique's interior."""
    return from_mask(h.closure_masks[k_index])


def leq(h: HierarchyForest, i: int, j: int) -> bool:
    ci, cj = h.closure_masks[i], h.closure_masks[j]
    return ci & cj == ci


def build_forest(
    g: PlanarGraph,
    cliques: Sequence[Clique3] | None = None,
    policy: TieBreakPolicy = DEFAULT_POLICY,
    validate: bool = True,
) -> HierarchyForest:
    if validate:
        require_maximal_planar(g)
    if cliques is None:
        cliques = enumerate_3cliques(g)
    cliques = tuple(tuple(k) for k in cliques)
    orientation = tuple(orient_clique(g, k, policy) for k in cliques)
    masks = tuple(to_mask(o.clique) | to_mask(o.interior) for o in orientation)
    sizes = [m.bit_count() for m in masks]

    # Only a separating clique has a closure larger than 3 vertices, so only
    # separating cliques can strictly enclose another clique.
    enclosing = sorted(
        (i for i, o in enumerate(orientation) if o.separating), key=lambda i: sizes[i]
    )
    parent: list[int | None] = [None] * len(cliques)
    for j, mj in enumerate(masks):
        best = None
        for i in enclosing:
            mi = masks[i]
            if i == j or mi & mj != mj:
                continue
            if best is None:
                best = i
                continue
            if sizes[i] > sizes[best]:
                break
            raise InvariantViolation(
                f"clique {cliques[j]} has two minimal enclosing cliques "
                f"{cliques[best]} and {cliques[i]}"
            )
        parent[j] = best

    children: list[list[int]] = [[] for _ in cliques]
    for j, p in enumerate(parent):
        if p is not None:
            children[p].append(j)
    roots = tuple(i for i, p in enumerate(parent) if p is None)

    depth = [-1] * len(cliques)
    stack = [(r, 0) for r in roots]
    while stack:
        i, d = stack.pop()
        depth[i] = d
        stack.extend((c, d + 1) for c in children[i])
    if -1 in depth:
        raise InvariantViolation("covering relation contains a cycle")

    return HierarchyForest(
        graph=g,
        policy=policy,
        cliques=cliques,
        orientation=orientation,
        parent=tuple(parent),
        children=tuple(tuple(c) for c in children),
        depth=tuple(depth),
        roots=roots,
        closure_masks=masks,
    )


def maximal_elements(h: HierarchyForest) -> list[int]:
    return list(h.roots)


@dataclass(frozen=True)
class NestedCommunity:
    root: int
    members: frozenset[int]


def nested_communities(h: HierarchyForest) -> list[NestedCommunity]:
    """One entry per tree of the forest, in root order."""
    out = []
    for r in h.roots:
        members = []
        stack = [r]
        while stack:
            i = stack.pop()
            members.append(i)
            stack.extend(h.children[i])
        out.append(NestedCommunity(r, frozenset(members)))
    return out
