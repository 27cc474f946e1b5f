import json

import pytest

from rtdg.cli import main
from rtdg.graph import Graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_json(tmp_path, capsys):
    path = tmp_path / "g.json"
    code, out, _ = run(capsys, "build", "--space", "zq:q=2,n=3", "--distances", "1,3", "--format", "json",
                       "--out", str(path))
    assert code == 0 and "vertices=8 edges=20" in out
    data = json.loads(path.read_text())
    assert data["vertex_count"] == 8 and len(data["edges"]) == 20
    assert data["space"] == "zq:q=2,n=3" and data["distances"] == [1, 3]


def test_build_dot_to_stdout(capsys):
    code, out, err = run(capsys, "build", "--space", "sn:n=3", "--distances", "3", "--format", "dot")
    assert code == 0
    assert out.count(" -- ") == 12 and out.count("[label=") == 6
    assert "vertices=6 edges=12" in err


def test_build_rejects_distance_one(capsys):
    code, _, err = run(capsys, "build", "--space", "sn:n=3", "--distances", "1")
    assert code != 0 and "1 not in dist(S_3)" in err and "--distances" in err


def test_build_bad_space(capsys):
    code, _, err = run(capsys, "build", "--space", "zq:q=1,n=3", "--distances", "1")
    assert code != 0 and "--space" in err


def test_build_size_limit(capsys, monkeypatch):
    monkeypatch.setenv("RTDG_MAX_POINTS", "100")
    code, _, err = run(capsys, "build", "--space", "zq:q=2,n=8", "--distances", "1")
    assert code != 0 and "256" in err


@pytest.mark.parametrize("space, D, expr", [
    ("zq:q=3,n=4", "1,3", "3*[3*K_3(1)]^3"),
    ("sn:n=4", "3", "4*K_3(2)"),
    ("product:sizes=2,3,2", "2", "2*K_3(2)"),
])
def test_formula(capsys, space, D, expr):
    code, out, _ = run(capsys, "formula", "--space", space, "--distances", D)
    assert code == 0 and out.splitlines()[0] == expr


def test_formula_stats(capsys):
    _, out, _ = run(capsys, "formula", "--space", "zq:q=3,n=4", "--distances", "1,3")
    assert "chi=9" in out and "degree=20" in out
    _, out, _ = run(capsys, "formula", "--space", "zq:q=3,n=4", "--distances", "1,3", "--format", "json")
    assert json.loads(out) == {"expr": "3*[3*K_3(1)]^3"}


def test_verify_all_sets(capsys):
    code, out, _ = run(capsys, "verify", "--space", "zq:q=2,n=4", "--all-distance-sets")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and len(lines) == 15
    assert all(x["claim"] == "structure" and x["status"] == "verified" for x in lines)


def test_verify_metric_and_embedding(capsys):
    code, out, _ = run(capsys, "verify", "--space", "sn:n=4", "--claims", "metric-axioms")
    assert code == 0 and json.loads(out)["status"] == "verified"
    code, out, _ = run(capsys, "verify", "--space", "sn:n=4", "--claims", "embedding", "--distances", "2,4")
    assert code == 0 and json.loads(out)["claim"] == "embedding"


def test_verify_inconclusive_exits_nonzero(capsys):
    code, out, _ = run(capsys, "verify", "--space", "zq:q=3,n=5", "--claims", "chromatic", "--distances", "5")
    assert code != 0 and json.loads(out)["status"] == "inconclusive"


def test_verify_needs_distance_sets(capsys):
    code, _, err = run(capsys, "verify", "--space", "zq:q=2,n=3", "--claims", "regularity")
    assert code != 0 and "--all-distance-sets" in err


def test_verify_max_sets(capsys):
    code, _, err = run(capsys, "verify", "--space", "zq:q=2,n=5", "--all-distance-sets", "--max-sets", "10")
    assert code != 0 and "--max-sets" in err


def test_verify_deterministic(capsys, tmp_path):
    args = ["verify", "--space", "sn:n=4", "--all-distance-sets", "--claims", "all"]
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


@pytest.mark.parametrize("space, D, chi", [
    ("zq:q=2,n=3", "1,2", 4),
    ("sn:n=3", "2,3", 6),
    ("zq:q=3,n=4", "1,3", 9),
])
def test_chromatic(capsys, space, D, chi):
    code, out, _ = run(capsys, "chromatic", "--space", space, "--distances", D)
    assert code == 0
    assert f"formula: {chi}" in out and f"exact: {chi}" in out and "agree: yes" in out


def test_chromatic_reads_build_output(tmp_path, capsys):
    path = tmp_path / "g.json"
    run(capsys, "build", "--space", "sn:n=4", "--distances", "2,4", "--format", "json", "--out", str(path))
    code, out, _ = run(capsys, "chromatic", "--graph", str(path))
    assert code == 0 and "exact: 8" in out and "agree: yes" in out


@pytest.mark.parametrize("argv, expected, code", [
    (["--family", "zq", "--q", "3", "--degree", "20"], "1,3", 0),
    (["--family", "sn", "--degree", "19"], "2,4", 0),
    (["--family", "zq", "--q", "2", "--degree", "0"], "", 0),
    (["--family", "sn", "--degree", "2"], "no preimage", 1),
    (["--family", "product", "--sizes", "2,3,2", "--degree", "5"], "1,2", 0),
    (["--family", "zq", "--q", "2", "--degree", "7", "--n", "2"], "no preimage", 1),
])
def test_recover(capsys, argv, expected, code):
    got, out, _ = run(capsys, "recover", *argv)
    assert got == code and out.strip() == expected


def test_export_round_trip(tmp_path, capsys):
    src = tmp_path / "g.json"
    run(capsys, "build", "--space", "product:sizes=2,3,2", "--distances", "1,3", "--format", "json", "--out", str(src))
    dot = tmp_path / "g.dot"
    assert run(capsys, "export", "--graph", str(src), "--format", "dot", "--out", str(dot))[0] == 0
    assert dot.read_text().count(" -- ") == Graph.from_json(src.read_text()).edge_count
    code, out, _ = run(capsys, "export", "--graph", str(src), "--format", "expr")
    assert code == 0 and out.strip() == "[3*K_2(1)]^2"
    copy = tmp_path / "copy.json"
    run(capsys, "export", "--graph", str(src), "--format", "json", "--out", str(copy))
    assert Graph.from_json(copy.read_text()) == Graph.from_json(src.read_text())
    code, out, _ = run(capsys, "export", "--space", "sn:n=4", "--distances", "3", "--format", "expr")
    assert out.strip() == "4*K_3(2)"
