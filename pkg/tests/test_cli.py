import json
import math
import subprocess
import sys

import pytest

from indset.cli import main
from indset.graph_core import (
    complete_bipartite,
    cycle_graph,
    disjoint_union,
    empty_graph,
    parse_graph,
    path_graph,
    serialize_graph,
)


@pytest.fixture
def graph_file(tmp_path):
    def write(g, name="g.txt"):
        p = tmp_path / name
        p.write_text(serialize_graph(g))
        return str(p)

    return write


def run(capsys, *argv):
    code = main(["--quiet", *argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


@pytest.mark.parametrize(
    "g, expected",
    [(complete_bipartite(3, 3), "15"), (empty_graph(10), "1024"), (path_graph(3), "5")],
)
def test_count(capsys, graph_file, g, expected):
    code, rep = run(capsys, "count", graph_file(g))
    assert code == 0 and rep["pass"] is True
    assert rep["results"]["count"] == expected
    assert rep["command"] == "count"
    assert len(rep["inputs"]["sha256"]) == 64


def test_count_enumerate(capsys, graph_file):
    code, rep = run(capsys, "count", graph_file(path_graph(3)), "--enumerate")
    assert code == 0
    assert sorted(map(tuple, rep["results"]["sets"])) == [(), (1,), (1, 3), (2,), (3,)]


def test_count_enumerate_over_cap(capsys, graph_file, monkeypatch):
    monkeypatch.setenv("INDSET_ENUM_CAP", "4")
    code, rep = run(capsys, "count", graph_file(path_graph(6)), "--enumerate")
    assert code == 1 and rep["pass"] is False
    assert rep["results"]["error"] == "CapacityError"


def test_count_strip_isolated(capsys, graph_file):
    g = disjoint_union([path_graph(3), empty_graph(2)])
    code, rep = run(capsys, "count", graph_file(g), "--strip-isolated")
    assert rep["results"]["count"] == "20"
    assert rep["results"]["stripped_isolated"] == 2


def test_verify_k22_all(capsys, graph_file):
    code, rep = run(capsys, "verify", graph_file(complete_bipartite(2, 2)), "--bound", "all")
    assert code == 0
    bounds = rep["results"]["bounds"]
    assert {k: v["verdict"] for k, v in bounds.items()} == {
        "kahn": "Tight", "sah": "Tight", "paper:default": "Tight", "paper:flipped": "Tight"
    }
    assert rep["results"]["comparisons"]["sah vs paper:default"] == "Equal"


def test_verify_p4_sah(capsys, graph_file):
    code, rep = run(capsys, "verify", graph_file(path_graph(4)), "--bound", "sah")
    assert code == 0
    assert rep["results"]["count"] == "8"
    assert rep["results"]["bounds"]["sah"]["verdict"] == "StrictlyAbove"


def test_verify_c5_paper_not_bipartite(capsys, graph_file):
    code, rep = run(capsys, "verify", graph_file(cycle_graph(5)), "--bound", "paper")
    assert code == 1 and rep["pass"] is False
    assert rep["results"]["bounds"]["paper"]["error"] == "NotBipartiteError"


def test_verify_kahn_irregular_fails_structured(capsys, graph_file):
    code, rep = run(capsys, "verify", graph_file(path_graph(3)), "--bound", "kahn")
    assert code == 1
    assert rep["results"]["bounds"]["kahn"]["error"] == "NotApplicable"


def test_verify_isolated_with_strip(capsys, graph_file):
    g = disjoint_union([complete_bipartite(1, 2), empty_graph(1)])
    code, rep = run(capsys, "verify", graph_file(g), "--bound", "sah")
    assert code == 1
    code, rep = run(capsys, "verify", graph_file(g), "--bound", "sah", "--strip-isolated")
    assert code == 0
    assert rep["results"]["bounds"]["sah"]["verdict"] == "Tight"
    assert rep["results"]["count_with_isolated"] == "10"


def test_audit(capsys, graph_file):
    code, rep = run(capsys, "audit", graph_file(complete_bipartite(2, 2)))
    assert code == 0 and rep["results"]["pass"] is True
    assert rep["results"]["final_bound_log2"] == pytest.approx(math.log2(7), abs=1e-9)
    code, rep = run(capsys, "audit", graph_file(complete_bipartite(1, 3)), "--orientation", "flip")
    assert code == 0 and rep["results"]["orientation"] == "flipped"
    code, rep = run(capsys, "audit", graph_file(cycle_graph(5)))
    assert code == 1 and rep["results"]["error"] == "NotBipartiteError"


def test_sweep_bipartite(capsys):
    code, rep = run(capsys, "sweep", "--max-left", "2", "--max-right", "2")
    assert code == 0 and rep["results"]["violations"] == 0
    code, rep = run(capsys, "sweep", "--max-left", "1", "--max-right", "1")
    assert rep["results"]["graphs_checked"] == 1
    assert rep["results"]["verdicts"]["sah"]["Tight"] == 1


def test_sweep_with_audit(capsys):
    code, rep = run(capsys, "sweep", "--max-left", "2", "--max-right", "3", "--audit")
    assert code == 0 and rep["results"]["audit_failures"] == 0
    assert rep["results"]["audits"] == 2 * rep["results"]["graphs_checked"]


def test_sweep_zhao(capsys):
    code, rep = run(capsys, "sweep", "--zhao-max-n", "4")
    assert code == 0
    res = rep["results"]
    assert res["violations"] == 0
    assert res["graphs_checked"] == 1 + 2 + 8 + 64
    assert res["injection_failures"] == 0


def test_sweep_limits(capsys):
    code, rep = run(capsys, "sweep", "--max-left", "6", "--max-right", "1")
    assert code == 1 and "allow-large" in rep["results"]["message"]
    code, rep = run(capsys, "sweep")
    assert code == 1


def test_construct_to_stdout(capsys):
    assert main(["--quiet", "construct", "bipartite", "2", "3"]) == 0
    out = capsys.readouterr().out
    assert parse_graph(out) == complete_bipartite(2, 3)


def test_construct_files(capsys, tmp_path, graph_file):
    k2 = tmp_path / "k2.txt"
    assert main(["--quiet", "construct", "complete", "2", "-o", str(k2)]) == 0
    capsys.readouterr()
    c3 = graph_file(cycle_graph(3), "c3.txt")
    dc = tmp_path / "dc.txt"
    main(["--quiet", "construct", "double-cover", c3, "-o", str(dc)])
    tp = tmp_path / "tp.txt"
    main(["--quiet", "construct", "tensor", c3, str(k2), "-o", str(tp)])
    assert parse_graph(dc.read_text()) == parse_graph(tp.read_text())
    un = tmp_path / "un.txt"
    main(["--quiet", "construct", "union", str(k2), str(k2), "-o", str(un)])
    assert parse_graph(un.read_text()).edges == {(1, 2), (3, 4)}


def test_parse_error_is_reported(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("p edge 2 1\ne 1 1\n")
    code, rep = run(capsys, "count", str(p))
    assert code == 1
    assert rep["results"]["error"] == "GraphParseError"
    assert "line 2" in rep["results"]["message"]


def test_output_deterministic_except_time(capsys, graph_file):
    path = graph_file(path_graph(5))
    outs = []
    for _ in range(2):
        main(["--quiet", "verify", path])
        rep = json.loads(capsys.readouterr().out)
        rep.pop("wall_time_ms")
        outs.append(json.dumps(rep))
    assert outs[0] == outs[1]


def test_module_entry_point_and_summary(graph_file):
    path = graph_file(path_graph(3))
    proc = subprocess.run([sys.executable, "-m", "indset", "count", path], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["count"] == "5"
    assert "PASS" in proc.stderr
    proc = subprocess.run([sys.executable, "-m", "indset", "count", path, "--quiet"], capture_output=True, text=True)
    assert proc.stderr == ""
