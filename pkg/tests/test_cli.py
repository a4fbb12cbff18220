"""CLI thin client: canonical output, file exports, exit codes."""

import json

import pytest

from groupgraphs.cli import main


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


def test_build_command(capsys):
    code, out = run_cli(["build", "--group", "S:3"], capsys)
    assert code == 0
    body = json.loads(out)
    assert body["order"] == 6 and body["group"] == "S:3"


def test_graph_command_byte_identical(capsys):
    code, first = run_cli(["graph", "--group", "Dic:3",
                           "--kind", "virt-independence"], capsys)
    assert code == 0
    _, second = run_cli(["graph", "--group", "Dic:3",
                         "--kind", "virt-independence"], capsys)
    assert first == second
    assert json.loads(first)["diameter"] == 3
    # canonical form: sorted keys, compact separators
    assert first == json.dumps(json.loads(first), sort_keys=True,
                               separators=(",", ":")) + "\n"


def test_graph_exports(tmp_path, capsys):
    dot = tmp_path / "g.dot"
    csv = tmp_path / "g.csv"
    code, out = run_cli(["graph", "--group", "S:3", "--kind", "generating",
                         "--dot", str(dot), "--csv", str(csv)], capsys)
    assert code == 0
    assert dot.read_text().startswith("graph")
    assert csv.read_text().splitlines()[0] == "u,v"
    assert json.loads(out)["kind"] == "generating"


def test_mingen_command_with_csv(tmp_path, capsys):
    path = tmp_path / "t.csv"
    code, out = run_cli(["mingen", "--group", "S:4", "--csv", str(path)], capsys)
    assert code == 0
    body = json.loads(out)
    assert (body["d"], body["m"]) == (2, 3)
    assert "csv" not in body
    assert path.read_text().startswith("group,d,m,size,witness")


def test_construction_command(capsys):
    code, out = run_cli(["construction", "--t", "2", "--samples", "10",
                         "--seed", "1"], capsys)
    assert code == 0
    body = json.loads(out)
    assert body["component_count"] == 2


def test_all_isolated_graph_report(capsys):
    code, out = run_cli(["graph", "--group", "C:4",
                         "--kind", "virt-independence"], capsys)
    assert code == 0
    body = json.loads(out)
    assert len(body["isolated"]) == 4 and body["diameter"] is None


def test_seqprod_command(tmp_path, capsys):
    fam = tmp_path / "family.txt"
    fam.write_text("".join(f"path:{2 ** n}\n" for n in range(9)))
    code, out = run_cli(["seqprod", "--family", str(fam), "--taus", "1.5,3",
                         "--threshold", "2"], capsys)
    assert code == 0
    assert json.loads(out)["all_separated"]


def test_verify_single_suite_exit_zero(capsys):
    code, out = run_cli(["verify", "--suite", "criterion-equivalence"], capsys)
    assert code == 0
    assert json.loads(out)["passed"]


def test_error_paths(capsys):
    with pytest.raises(SystemExit):
        main(["build", "--group", "Q:4"])
    with pytest.raises(SystemExit):
        main(["graph", "--group", "C:4", "--kind", "nope"])
    with pytest.raises(SystemExit):
        main([])
