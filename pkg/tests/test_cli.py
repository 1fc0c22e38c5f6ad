import csv
import io
import json
from pathlib import Path

import pytest

from multisat import Host, Subgraph, build_g2, decode_graph6, encode_graph6
from multisat.cli import CSV_HEADER, run

GOLDEN = Path(__file__).parent / "golden"


def call(argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def test_build_then_verify(monkeypatch):
    code, out, err = call(["build", "--kind", "g2", "--k", "3", "--n", "2"])
    assert code == 0
    assert out.strip() == encode_graph6(build_g2(3, 2).graph)
    assert "edge_count=6" in err and "is_saturated=True" in err
    code, out, _ = call(["verify", "--k", "3", "--n", "2", "--t", "3"], stdin=out, monkeypatch=monkeypatch)
    assert code == 0
    rep = json.loads(out)
    assert rep["is_saturated"] is True and rep["missing_checked"] == 6


def test_verify_golden(monkeypatch, tmp_path):
    graph = {"host": {"k": 3, "n": 2}, "edges": [[0, 3], [0, 5], [1, 4], [2, 5], [3, 4]]}
    path = tmp_path / "g.json"
    path.write_text(json.dumps(graph))
    code, out, _ = call(["verify", "--k", "3", "--n", "2", "--input", str(path)])
    assert code == 1
    golden = json.loads((GOLDEN / "verify_g2_3_2_minus_hub_edge.json").read_text())
    assert json.loads(out) == golden
    assert set(golden) == {"t", "kt_free", "witness", "non_completing", "missing_checked",
                           "is_saturated", "edge_count", "host"}


def test_verify_kt_exit(monkeypatch):
    full = encode_graph6(Subgraph.complete(Host(3, 2)))
    code, out, _ = call(["verify", "--k", "3", "--n", "2"], stdin=full, monkeypatch=monkeypatch)
    assert code == 2
    assert json.loads(out)["witness"] == [0, 2, 4]


def test_verify_text(monkeypatch):
    g6 = encode_graph6(build_g2(3, 2).graph)
    code, out, _ = call(["verify", "--k", "3", "--n", "2", "--format", "text"], stdin=g6, monkeypatch=monkeypatch)
    assert code == 0 and "saturated: yes" in out


def test_verify_parse_errors(monkeypatch, tmp_path):
    code, _, err = call(["verify", "--k", "3", "--n", "2"], stdin="E??\x07", monkeypatch=monkeypatch)
    assert code == 5 and "offset 3" in err
    code, _, _ = call(["verify", "--k", "3", "--n", "2"], stdin="{not json", monkeypatch=monkeypatch)
    assert code == 5
    code, _, _ = call(["verify", "--k", "3", "--n", "2", "--input", str(tmp_path / "absent")])
    assert code == 5
    code, _, _ = call(["verify", "--k", "3", "--n", "2"], stdin="BW", monkeypatch=monkeypatch)
    assert code == 5


def test_verify_host_mismatch(monkeypatch):
    doc = json.dumps({"host": {"k": 4, "n": 2}, "edges": []})
    code, _, _ = call(["verify", "--k", "3", "--n", "2"], stdin=doc, monkeypatch=monkeypatch)
    assert code == 3
    doc = json.dumps({"edges": [[0, 1]]})
    code, _, _ = call(["verify", "--k", "3", "--n", "2"], stdin=doc, monkeypatch=monkeypatch)
    assert code == 3


def test_build_json_and_no_verify():
    code, out, _ = call(["build", "--kind", "fknt", "--k", "4", "--n", "3", "--t", "4", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["report"]["is_saturated"] and doc["hub_count"] == 7 and doc["formula"] is None
    assert len(doc["edges"]) == doc["edge_count"]
    code, out, _ = call(["build", "--kind", "g1", "--k", "4", "--n", "2", "--format", "json", "--no-verify"])
    assert code == 0 and "report" not in json.loads(out)
    code, out, _ = call(["build", "--kind", "g1", "--k", "3", "--n", "2", "--format", "csv"])
    assert out.splitlines()[0] == "u,v" and len(out.splitlines()) == 8
    code, out, _ = call(["build", "--kind", "hknt", "--k", "5", "--n", "2", "--t", "4", "--format", "text"])
    assert code == 0 and "edge_count: 25" in out


def test_build_self_verify_failure_is_loud():
    code, _, err = call(["build", "--kind", "iknt", "--k", "6", "--n", "2", "--t", "6"])
    assert code == 1 and "is_saturated=False" in err


def test_formulas():
    code, out, _ = call(["formulas", "--k", "3", "--n", "5", "--format", "json"])
    doc = json.loads(out)
    assert code == 0 and doc["sat_k3"] == 24 and doc["argmin"] == "G2" and doc["g1"] == 34
    code, out, _ = call(["formulas", "--k", "5", "--n", "2", "--t", "4", "--format", "json"])
    doc = json.loads(out)
    assert doc["gknt"] == 26 and doc["hknt"] == 25 and doc["general_bound"] == 25
    code, out, _ = call(["formulas", "--k", "4", "--n", "2", "--t", "4", "--format", "json"])
    assert json.loads(out)["hknt"] is None


def test_table_deterministic():
    argv = ["table", "--kind", "g1", "--kind", "gknt", "--k", "3:5", "--n", "2,3", "--t", "3:4"]
    code, out, _ = call(argv)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == CSV_HEADER
    body = rows[1:]
    assert [r[:4] for r in body][:3] == [["g1", "3", "2", "3"], ["g1", "3", "3", "3"], ["g1", "4", "2", "3"]]
    assert all(r[4] == r[5] and r[6] == "true" for r in body)
    assert ["gknt", "4", "2", "4"] in [r[:4] for r in body]
    assert call(argv)[1] == out


def test_table_reports_failure():
    code, out, _ = call(["table", "--kind", "iknt", "--k", "6:7", "--n", "2", "--t", "6"])
    assert code == 1
    assert out.splitlines()[1:] == ["iknt,6,2,6,,48,false", "iknt,7,2,6,,72,true"]


def test_exact():
    code, out, _ = call(["exact", "--k", "3", "--n", "2", "--t", "3", "--format", "json"])
    doc = json.loads(out)
    assert code == 0 and doc["min_size"] == 6 and not doc["wall_budget_hit"]
    assert decode_graph6(doc["witness"], Host(3, 2)).edge_count == 6
    code, _, _ = call(["exact", "--k", "4", "--n", "2", "--max-subsets", "100"])
    assert code == 4
    code, _, err = call(["exact", "--k", "4", "--n", "3"])
    assert code == 3 and "cap" in err


def test_heuristic():
    argv = ["heuristic", "--k", "3", "--n", "2", "--trials", "16", "--seed", "5", "--format", "json", "--jobs", "1"]
    code, out, _ = call(argv)
    doc = json.loads(out)
    assert code == 0 and 6 <= doc["best_size"] <= 12 and len(doc["per_trial_sizes"]) == 16
    assert call(argv)[1] == out


def test_density(monkeypatch):
    code, out, _ = call(["density", "--kind", "g1", "--k", "3", "--n", "4"])
    assert code == 0
    assert out.splitlines() == ["i,j,edges,density", "1,2,15,0.9375", "1,3,4,0.25", "2,3,4,0.25"]
    g6 = encode_graph6(build_g2(3, 2).graph)
    code, out, _ = call(["density", "--k", "3", "--n", "2", "--input", "-", "--format", "json"],
                        stdin=g6, monkeypatch=monkeypatch)
    assert [r["edges"] for r in json.loads(out)] == [2, 2, 2]
    assert call(["density", "--k", "3", "--n", "2"])[0] == 3


@pytest.mark.parametrize("argv", [
    ["build", "--kind", "g1", "--k", "2", "--n", "3"],
    ["build", "--kind", "gknt", "--k", "4", "--n", "2", "--t", "5"],
    ["build", "--kind", "g1", "--k", "3", "--n", "2", "--bogus"],
    ["build", "--kind", "zzz", "--k", "3", "--n", "2"],
    ["formulas", "--k", "3"],
    ["heuristic", "--k", "3", "--n", "2", "--trials", "0"],
    ["verify", "--k", "3", "--n", "2", "--jobs", "0"],
    ["table", "--k", "3:x", "--n", "2"],
])
def test_parameter_errors(argv):
    assert call(argv)[0] == 3
