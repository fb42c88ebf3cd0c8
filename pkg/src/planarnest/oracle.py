"""Brute-force verifiers for the clique hierarchy and the bubble tree.

Everything here is recomputed from the raw adjacency with triple scans,
flood fills and subset tests. The only things borrowed from the rest of the
package are the graph container and the planarity test; the forest and the
bubbles are consulted solely as the objects under test.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .bubbles import all_bubbles, decompose
from .graph import PlanarGraph, planarity_test
from .hierarchy import DEFAULT_POLICY, TieBreakPolicy, build_forest

EXHAUSTIVE_MAX_N = 10


@dataclass
class CheckReport:
    check: str
    violations: list[str] = field(default_factory=list)
    skipped: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, message: str) -> None:
        self.violations.append(message)

    def to_json(self) -> str:
        return json.dumps(
            {
                "check": self.check,
                "ok": self.ok,
                "skipped": self.skipped,
                "violations": self.violations,
            },
            sort_keys=True,
        )


# ---------------------------------------------------------------------------
# primitives
# ---------------------------------------------------------------------------

def triangles(g: PlanarGraph, within: frozenset[int] | None = None) -> list[tuple[int, int, int]]:
    verts = sorted(within) if within is not None else range(g.n)
    return [
        t
        for t in combinations(verts, 3)
        if g.has_edge(t[0], t[1]) and g.has_edge(t[0], t[2]) and g.has_edge(t[1], t[2])
    ]


def flood_components(g: PlanarGraph, keep: frozenset[int] | set[int]) -> list[frozenset[int]]:
    """Components of the subgraph induced by ``keep``, ordered by min vertex."""
    left = set(keep)
    out = []
    for s in sorted(keep):
        if s not in left:
            continue
        comp = {s}
        left.discard(s)
        todo = [s]
        while todo:
            u = todo.pop()
            for w in g.adjacency[u]:
                if w in left:
                    left.discard(w)
                    comp.add(w)
                    todo.append(w)
        out.append(frozenset(comp))
    return out


@dataclass(frozen=True)
class Side:
    clique: tuple[int, int, int]
    interior: frozenset[int]
    exterior: frozenset[int]

    @property
    def closure(self) -> frozenset[int]:
        return self.interior | frozenset(self.clique)

    @property
    def separating(self) -> bool:
        return bool(self.interior) and bool(self.exterior)


def sides(g: PlanarGraph, prefer_min: bool = True) -> list[Side]:
    """Interior/exterior of every triangle; equal halves resolved by whether
    the half holding the smaller vertex id is the interior."""
    out = []
    everything = frozenset(range(g.n))
    for t in triangles(g):
        comps = flood_components(g, everything - set(t))
        if len(comps) == 1:
            out.append(Side(t, frozenset(), comps[0]))
            continue
        if len(comps) != 2:
            out.append(Side(t, frozenset(), frozenset()))  # flagged by the checks
            continue
        a, b = comps
        if len(a) == len(b):
            inner = a if prefer_min else b
        else:
            inner = min(a, b, key=len)
        out.append(Side(t, inner, b if inner is a else a))
    return out


def _prefer_min(policy: TieBreakPolicy | None) -> bool:
    return policy is None or policy is TieBreakPolicy.SMALLEST_MIN_VERTEX_IN


def maximal_cliques(all_sides: list[Side]) -> list[tuple[int, int, int]]:
    return [
        s.clique
        for s in all_sides
        if not any(s.closure < o.closure for o in all_sides)
    ]


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------

def check_poset_axioms(g: PlanarGraph, policy=None) -> CheckReport:
    rep = CheckReport("poset_axioms")
    ss = sides(g, _prefer_min(policy))
    for s in ss:
        if len(flood_components(g, frozenset(range(g.n)) - set(s.clique))) > 2:
            rep.add(f"removing {s.clique} leaves more than two components")
    cl = [s.closure for s in ss]
    c = len(cl)
    for i in range(c):
        if not cl[i] <= cl[i]:
            rep.add(f"reflexivity fails at {ss[i].clique}")
    below = [[j for j in range(c) if cl[i] <= cl[j]] for i in range(c)]
    for i in range(c):
        for j in below[i]:
            if j != i and cl[j] <= cl[i]:
                rep.add(f"antisymmetry fails for {ss[i].clique}, {ss[j].clique}")
            for m in below[j]:
                if not cl[i] <= cl[m]:
                    rep.add(
                        f"transitivity fails for {ss[i].clique} <= {ss[j].clique} "
                        f"<= {ss[m].clique}"
                    )
    return rep


def check_dichotomy(g: PlanarGraph, policy=None) -> CheckReport:
    """Nested closures or disjoint interiors for every pair; also every
    triangle touching an interior vertex stays inside that closure."""
    rep = CheckReport("dichotomy")
    ss = sides(g, _prefer_min(policy))
    for a, b in combinations(ss, 2):
        if a.closure <= b.closure or b.closure <= a.closure:
            continue
        if a.interior & b.interior:
            rep.add(f"{a.clique} and {b.clique}: overlapping interiors, no nesting")
    tris = [s.clique for s in ss]
    for s in ss:
        for t in tris:
            if set(t) & s.interior and not set(t) <= s.closure:
                rep.add(f"{t} touches interior of {s.clique} but leaves its closure")
    return rep


def check_forest(g: PlanarGraph, policy=None) -> CheckReport:
    rep = CheckReport("forest")
    policy = DEFAULT_POLICY if policy is None else policy
    h = build_forest(g, policy=policy)
    ss = {s.clique: s for s in sides(g, _prefer_min(policy))}

    if set(h.cliques) != set(ss):
        rep.add("forest clique set differs from brute-force triangle scan")
        return rep

    for i, k in enumerate(h.cliques):
        o = h.orientation[i]
        if o.interior != ss[k].interior or o.separating != ss[k].separating:
            rep.add(f"{k}: orientation disagrees with flood fill")

    # every parent must be a cover of its child, and only maximal cliques lack one
    cl = {k: s.closure for k, s in ss.items()}
    maximal = set(maximal_cliques(list(ss.values())))
    for i, p in enumerate(h.parent):
        k = h.cliques[i]
        if p is None:
            if k not in maximal:
                rep.add(f"{k} is a root but is not maximal")
            continue
        q = h.cliques[p]
        if not cl[k] < cl[q]:
            rep.add(f"parent {q} of {k} does not strictly enclose it")
            continue
        between = [z for z in cl if cl[k] < cl[z] < cl[q]]
        if between:
            rep.add(f"{q} does not cover {k}; {between[0]} lies between")

    # acyclic: every parent chain reaches a root within len(h) steps
    for i in range(len(h)):
        steps, j = 0, i
        while h.parent[j] is not None and steps <= len(h):
            j = h.parent[j]
            steps += 1
        if steps > len(h):
            rep.add(f"parent chain from {h.cliques[i]} cycles")
        elif steps != h.depth[i]:
            rep.add(f"{h.cliques[i]}: depth {h.depth[i]} but path length {steps}")

    if len(h.roots) != len(maximal):
        rep.add(f"{len(h.roots)} trees but {len(maximal)} maximal elements")

    for i, k in enumerate(h.cliques):
        if bool(h.children[i]) != ss[k].separating:
            rep.add(f"{k}: has children={bool(h.children[i])} separating={ss[k].separating}")
        kids = [h.cliques[c] for c in h.children[i]]
        for a, b in combinations(kids, 2):
            if ss[a].interior & ss[b].interior:
                rep.add(f"siblings {a} and {b} under {k} have overlapping interiors")
    return rep


def _bubble_predicate(g: PlanarGraph, verts: frozenset[int]) -> bool:
    m = len(verts)
    if m < 4:
        return False
    edge_count = sum(len(g.adjacency[v] & verts) for v in verts) // 2
    if edge_count != 3 * m - 6:
        return False
    if len(flood_components(g, verts)) != 1:
        return False
    for t in triangles(g, verts):
        if len(flood_components(g, verts - set(t))) > 1:
            return False
    sub = sorted(verts)
    pos = {v: i for i, v in enumerate(sub)}
    induced = PlanarGraph.from_edges(
        [(pos[u], pos[v]) for u in sub for v in g.adjacency[u] & verts if u < v], n=m
    )
    return planarity_test(induced)


def exhaustive_bubbles(g: PlanarGraph) -> set[frozenset[int]]:
    """Every vertex subset of order >= 4 whose induced subgraph is a bubble."""
    if g.n > EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive scan limited to n <= {EXHAUSTIVE_MAX_N}")
    out = set()
    for size in range(4, g.n + 1):
        for combo in combinations(range(g.n), size):
            verts = frozenset(combo)
            if _bubble_predicate(g, verts):
                out.add(verts)
    return out


def check_bubble_equivalence(g: PlanarGraph, policy=None) -> CheckReport:
    rep = CheckReport("bubble_equivalence")
    if g.n > EXHAUSTIVE_MAX_N:
        rep.skipped = True
        return rep
    found = {b.vertices for b in all_bubbles(build_forest(g, policy=policy or DEFAULT_POLICY))}
    scanned = exhaustive_bubbles(g)
    for extra in sorted(found - scanned, key=sorted):
        rep.add(f"constructed bubble {sorted(extra)} fails the exhaustive predicate")
    for missing in sorted(scanned - found, key=sorted):
        rep.add(f"bubble {sorted(missing)} found by scan but not constructed")
    return rep


def _bubble_signature(tree) -> tuple:
    h = tree.forest
    verts = frozenset(b.vertices for b in tree.bubbles)
    members = frozenset(frozenset(h.cliques[i] for i in b.cliques) for b in tree.bubbles)
    edges = frozenset(
        (
            frozenset((tree.bubble(p).vertices, tree.bubble(c).vertices)),
            h.cliques[label],
        )
        for p, c, label in tree.edges()
    )
    return verts, members, edges


def check_tiebreak_independence(g: PlanarGraph) -> CheckReport:
    rep = CheckReport("tiebreak_independence")
    a = _bubble_signature(decompose(g, TieBreakPolicy.SMALLEST_MIN_VERTEX_IN))
    b = _bubble_signature(decompose(g, TieBreakPolicy.LARGEST_MIN_VERTEX_IN))
    for name, x, y in zip(("bubble vertex sets", "member cliques", "tree edges"), a, b):
        if x != y:
            rep.add(f"{name} differ between tie-break policies")
    return rep


def check_bubble_cover(g: PlanarGraph, policy=None) -> CheckReport:
    rep = CheckReport("bubble_cover")
    policy = DEFAULT_POLICY if policy is None else policy
    tree = decompose(g, policy)
    h = tree.forest
    ss = {s.clique: s for s in sides(g, _prefer_min(policy))}

    all_edges = set(g.edges())
    covered_edges = set().union(*(b.edges() for b in tree.bubbles))
    if covered_edges != all_edges:
        rep.add("bubble edge sets do not cover E exactly")
    if set().union(*(b.vertices for b in tree.bubbles)) != set(range(g.n)):
        rep.add("bubble vertex sets do not cover V")

    count = {k: 0 for k in ss}
    for b in tree.bubbles:
        members = {h.cliques[i] for i in b.cliques}
        if members != set(triangles(g, b.vertices)):
            rep.add(f"bubble {b.id}: member cliques differ from induced triangles")
        if len(members) < 2:
            rep.add(f"bubble {b.id} has fewer than two cliques")
        for t in members:
            count[t] += 1
            if len(flood_components(g, b.vertices - set(t))) > 1:
                rep.add(f"{t} separates bubble {b.id}")
        # at most one member encloses all others, and then it covers each of them
        top = [t for t in members if all(ss[u].closure <= ss[t].closure for u in members)]
        if len(top) > 1:
            rep.add(f"bubble {b.id} has {len(top)} dominating cliques")
        for t in top:
            for u in members - {t}:
                if any(ss[u].closure < ss[z].closure < ss[t].closure for z in ss):
                    rep.add(f"bubble {b.id}: {t} does not cover member {u}")

    for t, c in count.items():
        want = 2 if ss[t].separating else 1
        if c != want:
            rep.add(f"{t} lies in {c} bubbles, expected {want}")

    n_sep = sum(s.separating for s in ss.values())
    if len(tree.bubbles) != n_sep + 1:
        rep.add(f"{len(tree.bubbles)} bubbles for {n_sep} separating cliques")
    if len(tree.edges()) != n_sep:
        rep.add(f"{len(tree.edges())} tree edges for {n_sep} separating cliques")

    roots = [b for b, p in tree.parent.items() if p is None]
    if len(roots) != 1:
        rep.add(f"bubble tree has {len(roots)} roots")
    for p, c, label in tree.edges():
        shared = tree.bubble(p).cliques & tree.bubble(c).cliques
        if shared != {label}:
            rep.add(f"edge {p}->{c}: label is not the unique shared clique")
        if not ss[h.cliques[label]].separating:
            rep.add(f"edge {p}->{c}: label {h.cliques[label]} is not separating")
    return rep


def run_all(g: PlanarGraph, policy=None) -> list[CheckReport]:
    reports = [
        check_poset_axioms(g, policy),
        check_dichotomy(g, policy),
        check_forest(g, policy),
        check_bubble_cover(g, policy),
        check_tiebreak_independence(g),
        check_bubble_equivalence(g, policy),
    ]
    return reports
