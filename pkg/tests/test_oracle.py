import dataclasses
import json

import pytest

from conftest import random_graphs
from planarnest import oracle
from planarnest.generators import (
    apollonian,
    equal_split_example,
    named_graph,
    random_triangulation,
)
from planarnest.hierarchy import TieBreakPolicy, build_forest


@pytest.mark.parametrize(
    "check",
    [
        oracle.check_poset_axioms,
        oracle.check_dichotomy,
        oracle.check_forest,
        oracle.check_bubble_cover,
        oracle.check_tiebreak_independence,
        oracle.check_bubble_equivalence,
    ],
)
@pytest.mark.parametrize("name", ["k4", "octahedron", "apollonian2", "apollonian3", "two_bubble"])
def test_checks_pass(check, name, two_bubble):
    g = {
        "k4": named_graph("k4"),
        "octahedron": named_graph("octahedron"),
        "apollonian2": apollonian(2),
        "apollonian3": apollonian(3),
        "two_bubble": two_bubble,
    }[name]
    rep = check(g)
    assert rep.ok, rep.violations


@pytest.mark.parametrize("name,g", list(random_graphs(sizes=(15,), seeds=range(5))))
def test_forest_random_15(name, g):
    assert oracle.check_forest(g).ok


def test_forest_k4_has_four_trees(k4):
    ss = oracle.sides(k4)
    assert len(oracle.maximal_cliques(ss)) == 4


class TestExhaustive:
    def test_k4(self, k4):
        assert oracle.exhaustive_bubbles(k4) == {frozenset(range(4))}

    def test_two_bubble(self, two_bubble):
        g = two_bubble
        found = {frozenset(g.vertex_labels(s)) for s in oracle.exhaustive_bubbles(g)}
        assert found == {frozenset("abcd"), frozenset("acdefg")}

    def test_apollonian_gen2(self):
        found = oracle.exhaustive_bubbles(apollonian(2))
        assert found == {
            frozenset({0, 1, 2, 3}),
            frozenset({0, 1, 3, 4}),
            frozenset({0, 2, 3, 5}),
            frozenset({1, 2, 3, 6}),
        }

    def test_octahedron_single(self):
        assert oracle.exhaustive_bubbles(named_graph("octahedron")) == {frozenset(range(6))}

    def test_size_limit(self):
        with pytest.raises(ValueError):
            oracle.exhaustive_bubbles(apollonian(3))
        assert oracle.check_bubble_equivalence(apollonian(3)).skipped


class TestTieBreak:
    def test_equal_split(self):
        assert oracle.check_tiebreak_independence(equal_split_example()).ok

    def test_equal_split_forests_differ(self):
        # the clique forests themselves do depend on the policy here
        g = equal_split_example()
        lo = build_forest(g, policy=TieBreakPolicy.SMALLEST_MIN_VERTEX_IN)
        hi = build_forest(g, policy=TieBreakPolicy.LARGEST_MIN_VERTEX_IN)
        assert lo.parent != hi.parent
        for policy in TieBreakPolicy:
            assert oracle.check_forest(g, policy).ok
            assert oracle.check_bubble_cover(g, policy).ok

    def test_trivial_when_no_ties(self):
        assert oracle.check_tiebreak_independence(apollonian(3)).ok


class TestDetectsCorruption:
    """The checks must actually fail when the structure under test is wrong."""

    def test_wrong_parent(self, monkeypatch):
        real = oracle.build_forest

        def broken(g, policy=None, **kw):
            h = real(g, policy=policy, **kw)
            parent = list(h.parent)
            child = next(i for i, p in enumerate(parent) if p is not None)
            parent[child] = None
            return dataclasses.replace(h, parent=tuple(parent))

        monkeypatch.setattr(oracle, "build_forest", broken)
        rep = oracle.check_forest(apollonian(3))
        assert not rep.ok
        assert any("not maximal" in v for v in rep.violations)

    def test_non_cover_parent(self, monkeypatch):
        real = oracle.build_forest

        def skip_level(g, policy=None, **kw):
            h = real(g, policy=policy, **kw)
            parent = list(h.parent)
            i = next(i for i in range(len(h)) if h.depth[i] == 2)
            parent[i] = parent[parent[i]]
            return dataclasses.replace(h, parent=tuple(parent))

        monkeypatch.setattr(oracle, "build_forest", skip_level)
        rep = oracle.check_forest(apollonian(3))
        assert any("does not cover" in v for v in rep.violations)

    def test_missing_bubble(self, monkeypatch):
        real = oracle.all_bubbles
        monkeypatch.setattr(oracle, "all_bubbles", lambda h: real(h)[:-1])
        rep = oracle.check_bubble_equivalence(apollonian(2))
        assert any("not constructed" in v for v in rep.violations)


def test_report_json():
    rep = oracle.CheckReport("x", ["bad"])
    assert json.loads(rep.to_json()) == {
        "check": "x", "ok": False, "skipped": False, "violations": ["bad"]
    }


def test_run_all_names():
    names = [r.check for r in oracle.run_all(random_triangulation(9, 1))]
    assert names == [
        "poset_axioms", "dichotomy", "forest", "bubble_cover",
        "tiebreak_independence", "bubble_equivalence",
    ]
