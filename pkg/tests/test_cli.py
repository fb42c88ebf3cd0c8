import json
import re
import subprocess
import sys

import pydot
import pytest

from planarnest.cli import run

GENERATE_CASES = [
    ["generate", "two-bubble"],
    ["generate", "equal-split"],
    ["generate", "apollonian", "--gen", "3"],
    ["generate", "random", "--n", "11", "--seed", "4"],
    ["generate", "named", "--name", "icosahedron"],
]


def invoke(argv, stdin="", capsys=None, monkeypatch=None):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(capsys, monkeypatch):
    def call(argv, stdin=""):
        return invoke(argv, stdin, capsys, monkeypatch)

    return call


def test_two_bubble_analyze(cli):
    _, edges, _ = cli(["generate", "two-bubble"])
    code, out, _ = cli(["analyze", "-"], edges)
    assert code == 0
    assert "bubbles: 2" in out
    assert "separating: 1" in out


def test_analyze_json(cli):
    _, edges, _ = cli(["generate", "apollonian", "--gen", "2"])
    code, out, _ = cli(["analyze", "-", "--format", "json"], edges)
    assert json.loads(out) == {
        "n": 7, "edges": 15, "cliques": 13, "separating": 3,
        "maximal_elements": 4, "max_depth": 1, "bubbles": 4,
    }


def test_k4_bubbles_json(cli):
    _, edges, _ = cli(["generate", "named", "--name", "k4"])
    code, out, _ = cli(["bubbles", "-", "--format", "json"], edges)
    data = json.loads(out)
    assert code == 0
    assert len(data["bubbles"]) == 1
    assert data["bubbles"][0]["root_clique"] == "imaginary"
    assert data["tree"] == []


def test_two_bubble_bubbles_json(cli):
    _, edges, _ = cli(["generate", "two-bubble"])
    data = json.loads(cli(["bubbles", "-"], edges)[1])
    assert set(data) == {"bubbles", "tree"}
    for b in data["bubbles"]:
        assert set(b) == {"id", "root_clique", "vertices", "cliques"}
    (edge,) = data["tree"]
    assert set(edge) == {"parent", "child", "shared_clique"}
    assert sorted(edge["shared_clique"]) == ["a", "c", "d"]


def test_hierarchy_json_schema(cli):
    _, edges, _ = cli(["generate", "two-bubble"])
    records = json.loads(cli(["hierarchy", "-"], edges)[1])
    assert len(records) == 11
    for r in records:
        assert set(r) == {"clique", "separating", "interior_size", "parent", "depth"}
    sep = [r for r in records if r["separating"]]
    assert len(sep) == 1 and sep[0]["interior_size"] == 1
    children = [r for r in records if r["parent"] == sep[0]["clique"]]
    assert len(children) == 3 and all(r["depth"] == 1 for r in children)


@pytest.mark.parametrize("command", ["hierarchy", "bubbles"])
def test_dot_parses(cli, command):
    _, edges, _ = cli(["generate", "apollonian", "--gen", "3"])
    code, out, _ = cli([command, "-", "--format", "dot"], edges)
    assert code == 0
    (graph,) = pydot.graph_from_dot_data(out)
    assert graph.get_type() == "digraph"
    if command == "bubbles":
        assert len(graph.get_edges()) == 12
        assert len(graph.get_nodes()) == 13
        assert all(re.fullmatch(r'"B\d+\|\d+"', n.get_label()) for n in graph.get_nodes())
    else:
        assert len(graph.get_nodes()) == 40


def test_hierarchy_dot_direction(cli):
    _, edges, _ = cli(["generate", "two-bubble"])
    out = cli(["hierarchy", "-", "--format", "dot"], edges)[1]
    (graph,) = pydot.graph_from_dot_data(out)
    labels = {n.get_name(): n.get_label().strip('"') for n in graph.get_nodes()}
    targets = {labels[e.get_destination()] for e in graph.get_edges()}
    assert targets == {"(a,c,d)"}


def test_verify_apollonian(cli):
    _, edges, _ = cli(["generate", "apollonian", "--gen", "3"])
    code, out, _ = cli(["verify", "-"], edges)
    assert code == 0
    lines = [json.loads(x) for x in out.splitlines()]
    assert len(lines) == 6 and all(x["ok"] for x in lines)


@pytest.mark.parametrize("argv", GENERATE_CASES)
def test_round_trip_validates(cli, argv):
    _, edges, _ = cli(argv + ["--format", "edgelist"])
    code, out, _ = cli(["analyze", "-"], edges)
    assert code == 0


def test_pmfg(cli, tmp_path):
    path = tmp_path / "w.csv"
    path.write_text(
        ",a,b,c,d,e\n"
        "a,1,0.9,0.1,0.2,0.3\n"
        "b,0.9,1,0.8,0.4,0.5\n"
        "c,0.1,0.8,1,0.7,0.6\n"
        "d,0.2,0.4,0.7,1,0.05\n"
        "e,0.3,0.5,0.6,0.05,1\n"
    )
    code, out, _ = cli(["pmfg", str(path)])
    assert code == 0
    pairs = {frozenset(line.split()) for line in out.splitlines()}
    assert len(pairs) == 9
    assert frozenset("de") not in pairs
    code, out, _ = cli(["analyze", "-"], out)
    assert code == 0


def test_out_flag(cli, tmp_path):
    target = tmp_path / "g.txt"
    code, out, _ = cli(["generate", "named", "--name", "octahedron", "--out", str(target)])
    assert code == 0 and out == ""
    assert len(target.read_text().splitlines()) == 12


def test_tie_break_flag(cli):
    _, edges, _ = cli(["generate", "equal-split"])
    lo = json.loads(cli(["hierarchy", "-", "--tie-break", "min"], edges)[1])
    hi = json.loads(cli(["hierarchy", "-", "--tie-break", "max"], edges)[1])
    assert lo != hi
    blo = json.loads(cli(["bubbles", "-", "--tie-break", "min"], edges)[1])
    bhi = json.loads(cli(["bubbles", "-", "--tie-break", "max"], edges)[1])
    assert {frozenset(b["vertices"]) for b in blo["bubbles"]} == {
        frozenset(b["vertices"]) for b in bhi["bubbles"]
    }


class TestErrors:
    def test_invalid_graph(self, cli):
        code, _, err = cli(["analyze", "-"], "0 1\n1 2\n0 2\n")
        assert code == 1
        assert "invalid input" in err

    def test_parse_error(self, cli):
        code, _, err = cli(["analyze", "-"], "a b c\n")
        assert code == 1
        assert "line 1" in err

    def test_unreadable(self, cli, tmp_path):
        code, _, err = cli(["analyze", str(tmp_path / "missing.txt")])
        assert code == 2
        assert "cannot read" in err

    def test_unknown_subcommand(self, cli):
        with pytest.raises(SystemExit) as info:
            cli(["frobnicate"])
        assert info.value.code == 2

    def test_bad_format(self, cli):
        with pytest.raises(SystemExit) as info:
            cli(["generate", "two-bubble", "--format", "dot"])
        assert info.value.code == 2

    def test_missing_name(self, cli):
        assert cli(["generate", "named"])[0] == 2

    def test_verify_failure_exit(self, cli, monkeypatch):
        from planarnest import oracle

        monkeypatch.setattr(
            oracle, "run_all", lambda g, policy=None: [oracle.CheckReport("x", ["bad"])]
        )
        _, edges, _ = cli(["generate", "named", "--name", "k4"])
        assert cli(["verify", "-"], edges)[0] == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "planarnest", "generate", "named", "--name", "k4"],
        capture_output=True, text=True, check=True,
    )
    assert len(proc.stdout.splitlines()) == 6
