import json

import pytest

from arlab.cli import main
from arlab.colorings import all_rainbow
from arlab.graph_core import friendship
from arlab.graph_io import from_graph6, to_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_friendship(capsys):
    code, out, _ = run(capsys, "construct", "friendship", "--k", "2")
    assert code == 0 and out.strip() == to_graph6(friendship(2))


def test_construct_coloring_two_cliques(capsys):
    code, out, _ = run(capsys, "construct", "coloring-two-cliques", "--n", "27", "--k", "3")
    data = json.loads(out)
    assert code == 0 and data["r"] == 7 and data["schema"] == "v1"


def test_construct_ex_friendship(capsys):
    code, out, _ = run(capsys, "construct", "ex-friendship", "--n", "20", "--k", "2")
    assert code == 0 and from_graph6(out).num_edges() == 101


@pytest.mark.parametrize("argv", [
    ("construct", "turan", "--n", "7"),
    ("construct", "h-member", "--nu", "3", "--delta", "3"),
    ("construct", "d-member", "--k", "4"),
    ("construct", "coloring-k2", "--n", "6"),
    ("construct", "coloring-clique-c", "--n", "12", "--k", "4"),
    ("construct", "coloring-lower-f", "--n", "10", "--k", "1"),
])
def test_construct_kinds(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip()


def test_construct_is_deterministic(capsys):
    first = run(capsys, "construct", "coloring-clique-c", "--n", "16", "--k", "4")[1]
    second = run(capsys, "construct", "coloring-clique-c", "--n", "16", "--k", "4")[1]
    assert first == second


def test_usage_errors(capsys):
    assert run(capsys, "construct", "coloring-two-cliques", "--n", "27", "--k", "4")[0] == 2
    assert run(capsys, "construct", "friendship")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "construct", "friendship", "--k", "2", "--format", "csv")[0] == 2


def test_verify_rainbow_free(tmp_path, capsys):
    path = tmp_path / "c.json"
    assert run(capsys, "construct", "coloring-two-cliques", "--n", "27", "--k", "3", "--out", str(path))[0] == 0
    code, out, _ = run(capsys, "verify", str(path), "--check", "rainbow-free", "--targets", "K1,4;4K2")
    assert code == 0 and json.loads(out)["passed"] is True


def test_verify_rainbow_found(tmp_path, capsys):
    path = tmp_path / "k7.json"
    path.write_text(all_rainbow(7).to_json())
    code, out, _ = run(capsys, "verify", str(path), "--check", "rainbow-free", "--targets", "F3")
    data = json.loads(out)
    assert code == 1 and data["embedding"]["pattern"] == "friendship"


def test_verify_membership_and_structure(tmp_path, capsys):
    path = tmp_path / "d.g6"
    run(capsys, "construct", "d-member", "--k", "4", "--out", str(path))
    assert run(capsys, "verify", str(path), "--check", "membership", "--family", "D", "--k", "4")[0] == 0
    assert run(capsys, "verify", str(path), "--check", "membership", "--family", "F", "--nu", "3", "--delta", "3")[0] == 0
    assert run(capsys, "verify", str(path), "--check", "membership", "--family", "E", "--nu", "3", "--delta", "3")[0] == 1
    code, out, _ = run(capsys, "verify", str(path), "--check", "ge-structure")
    assert code == 0 and "decomposition" in json.loads(out)
    code, out, _ = run(capsys, "verify", str(path), "--check", "factor-critical")
    assert code == 1


def test_verify_factor_critical_counterexample(tmp_path, capsys):
    path = tmp_path / "p3.g6"
    path.write_text("Bg\n")  # the path 0-1-2
    code, out, _ = run(capsys, "verify", str(path), "--check", "factor-critical")
    assert code == 1 and json.loads(out)["unmatchable_after_deleting"] == 1
    path.write_text("Bw\n")  # K_3
    assert run(capsys, "verify", str(path), "--check", "factor-critical")[0] == 0


def test_verify_parse_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "verify", str(bad), "--check", "ge-structure")[0] == 2
    assert run(capsys, "verify", str(tmp_path / "missing"), "--check", "ge-structure")[0] == 2
    g6 = tmp_path / "g.g6"
    g6.write_text("Bw")
    assert run(capsys, "verify", str(g6), "--check", "rainbow-free", "--targets", "F1")[0] == 2


def test_oracle_commands(capsys):
    code, out, _ = run(capsys, "oracle", "ar", "--n", "5", "--family", "F2")
    data = json.loads(out)
    assert code == 0 and data["value"] == 8 and data["schema"] == "v1" and "caps" in data
    code, out, _ = run(capsys, "oracle", "f", "--nu", "2", "--delta", "2")
    data = json.loads(out)
    assert code == 0 and data["value"] == 6 and len(data["witnesses"]) == 1
    code, out, _ = run(capsys, "oracle", "ex", "--n", "7", "--pattern", "F2")
    assert code == 0 and json.loads(out)["value"] == 13
    code, out, _ = run(capsys, "oracle", "ex", "--n", "6", "--format", "csv")
    assert code == 0 and out.splitlines()[1].startswith("ex,")
    code, out, _ = run(capsys, "oracle", "extremal-set", "--nu", "2", "--delta", "2")
    assert code == 0 and json.loads(out)["value"] == 1
    code, out, _ = run(capsys, "oracle", "lemma-aa", "--n", "6", "--k", "1")
    assert code == 0 and json.loads(out)["value"] == 0


def test_oracle_capped_exit(capsys):
    assert run(capsys, "oracle", "f", "--nu", "2", "--delta", "2", "--cap-vertices", "5")[0] == 3
    assert run(capsys, "oracle", "ar", "--n", "5", "--family", "F2", "--cap-partitions", "10")[0] == 3
    assert run(capsys, "oracle", "ex", "--n", "12")[0] == 3


def test_oracle_output_stable_across_workers(capsys, monkeypatch):
    single = run(capsys, "oracle", "ex", "--n", "6", "--pattern", "F2", "--workers", "1")[1]
    multi = run(capsys, "oracle", "ex", "--n", "6", "--pattern", "F2", "--workers", "2")[1]
    strip = lambda s: {k: v for k, v in json.loads(s).items() if k != "caps"}
    assert strip(single) == strip(multi)
    monkeypatch.setenv("ARLAB_WORKERS", "2")
    data = json.loads(run(capsys, "oracle", "ex", "--n", "5")[1])
    assert data["caps"]["workers"] == 2


def test_report_formulas(capsys, tmp_path):
    out_file = tmp_path / "f.csv"
    code, _, _ = run(capsys, "report", "formulas", "--format", "csv", "--out", str(out_file))
    lines = out_file.read_text().splitlines()
    assert code == 0 and lines[0] == "key,title,status,detail" and len(lines) == 10
    assert all(",PASS," in line for line in lines[1:])


def test_report_families(capsys):
    code, out, _ = run(capsys, "report", "families")
    assert code == 0 and out.startswith("<!-- schema v1")


@pytest.mark.slow
def test_report_acceptance_all_rows_pass(capsys):
    code, out, _ = run(capsys, "report", "acceptance", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["rows"]) == 11 and all(r["passed"] for r in data["rows"])
