"""JSON and DOT serialisation of the clique forest and the bubble tree.

Vertices are always written with their original labels.
"""
from __future__ import annotations

import json

from .bubbles import IMAGINARY, BubbleTree
from .hierarchy import HierarchyForest


def _clique_labels(h: HierarchyForest, i: int) -> list[str]:
    return [h.graph.labels[v] for v in h.cliques[i]]


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hierarchy_records(h: HierarchyForest) -> list[dict]:
    return [
        {
            "clique": _clique_labels(h, i),
            "separating": o.separating,
            "interior_size": len(o.interior),
            "parent": None if h.parent[i] is None else _clique_labels(h, h.parent[i]),
            "depth": h.depth[i],
        }
        for i, o in enumerate(h.orientation)
    ]


def hierarchy_json(h: HierarchyForest) -> str:
    return json.dumps(hierarchy_records(h), indent=2)


def hierarchy_dot(h: HierarchyForest) -> str:
    # edges point child -> parent, the direction of the covering relation
    lines = ["digraph H {"]
    for i in range(len(h)):
        label = "(" + ",".join(_clique_labels(h, i)) + ")"
        lines.append(f"  k{i} [label={_dot_quote(label)}];")
    for child, parent in h.edges():
        lines.append(f"  k{child} -> k{parent};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def bubbles_record(tree: BubbleTree) -> dict:
    h = tree.forest
    g = h.graph
    bubbles = [
        {
            "id": b.id,
            "root_clique": IMAGINARY if b.root is None else _clique_labels(h, b.root),
            "vertices": g.vertex_labels(b.vertices),
            "cliques": [_clique_labels(h, i) for i in sorted(b.cliques)],
        }
        for b in tree.bubbles
    ]
    edges = [
        {"parent": p, "child": c, "shared_clique": _clique_labels(h, k)}
        for p, c, k in tree.edges()
    ]
    return {"bubbles": bubbles, "tree": edges}


def bubbles_json(tree: BubbleTree) -> str:
    return json.dumps(bubbles_record(tree), indent=2)


def bubbles_dot(tree: BubbleTree) -> str:
    # parent -> child, opposite to the clique forest's direction
    h = tree.forest
    lines = ["digraph Hb {"]
    for b in tree.bubbles:
        lines.append(f"  b{b.id} [label={_dot_quote(f'B{b.id}|{len(b.vertices)}')}];")
    for p, c, k in tree.edges():
        label = ",".join(_clique_labels(h, k))
        lines.append(f"  b{p} -> b{c} [label={_dot_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def summary(tree: BubbleTree) -> dict:
    h = tree.forest
    g = h.graph
    return {
        "n": g.n,
        "edges": g.edge_count,
        "cliques": len(h),
        "separating": len(h.separating),
        "maximal_elements": len(h.roots),
        "max_depth": h.max_depth,
        "bubbles": len(tree.bubbles),
    }
