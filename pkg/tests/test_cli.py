"""Tests for the command line front end."""

import json

from vertexskein import cli
from vertexskein import vertexcore as vc


def run_cli(capsys, *argv):
    status = cli.main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_vertex_text_output(capsys):
    status, out, err = run_cli(capsys, "vertex", "[1]", "[]", "[1]")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == cli.TEXT_HEADER
    assert lines[1] == vc.vertex_c((1,), (), (1,)).text()


def test_vertex_json_and_csv(capsys):
    status, out, _ = run_cli(capsys, "vertex", "[2,1]", "[]", "[]",
                             "--format", "json")
    assert status == 0
    payload = json.loads(out)
    assert payload["l1"] == [2, 1]
    assert payload["text"] == vc.vertex_c((2, 1), (), ()).text()
    status, out, _ = run_cli(capsys, "vertex", "[1]", "[]", "[]",
                             "--format", "csv")
    assert status == 0
    assert out.splitlines()[0] == "l1,l2,l3,formula,value"


def test_vertex_rejects_bad_partition(capsys):
    status, out, err = run_cli(capsys, "vertex", "[1,2]", "[]", "[]")
    assert status == 2
    assert out == ""
    assert "not a partition" in err
    status, _, err = run_cli(capsys, "vertex", "oops", "[]", "[]")
    assert status == 2
    assert "bad partition syntax" in err


def test_table_cache_roundtrip(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv(cli.CACHE_ENV, str(tmp_path))
    status, first, _ = run_cli(capsys, "table", "--max-size", "3",
                               "--format", "json")
    assert status == 0
    path = tmp_path / "table-T-3.json"
    assert path.exists()
    status, second, _ = run_cli(capsys, "table", "--max-size", "3",
                                "--format", "json")
    assert status == 0
    assert first == second
    assert json.loads(first)["cachePath"] == str(path)


def test_table_corrupt_cache(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv(cli.CACHE_ENV, str(tmp_path))
    path = tmp_path / "table-T-2.json"
    path.write_text("{not json")
    status, out, err = run_cli(capsys, "table", "--max-size", "2")
    assert status == 2
    assert "corrupt cache" in err


def test_table_without_cache(monkeypatch, capsys):
    monkeypatch.delenv(cli.CACHE_ENV, raising=False)
    status, out, _ = run_cli(capsys, "table", "--max-size", "2",
                             "--format", "csv")
    assert status == 0
    rows = out.splitlines()
    assert rows[0] == "l1,l2,l3,value"
    assert len(rows) == 1 + len(vc.build_table(2, "T"))


def test_solve_reports_agreement(capsys):
    status, out, _ = run_cli(capsys, "solve", "--max-size", "3",
                             "--format", "json")
    assert status == 0
    payload = json.loads(out)
    assert payload["mismatches"] == []
    assert payload["entries"] == len(vc.build_table(3, "T"))


def test_series_main_and_sign(capsys):
    status, out, _ = run_cli(capsys, "series", "--family", "main",
                             "--degree", "3", "--format", "json")
    assert status == 0
    payload = json.loads(out)
    exps = [row["exp"] for row in payload["terms"]]
    assert [0, 0, 0] in exps
    status, flipped, _ = run_cli(capsys, "series", "--family", "main",
                                 "--degree", "3", "--sign", "minus",
                                 "--format", "json")
    assert status == 0
    assert json.loads(flipped)["terms"] != payload["terms"]


def test_series_filling(capsys):
    status, out, _ = run_cli(capsys, "series", "--family", "F4",
                             "--degree", "2", "--format", "json")
    assert status == 0
    payload = json.loads(out)
    assert payload["family"] == "F4"


def test_augmentation(capsys):
    status, out, _ = run_cli(capsys, "augmentation", "--order", "2",
                             "--format", "json")
    assert status == 0
    payload = json.loads(out)
    assert len(payload["jets"]) == 3


def test_verify_small_suites(capsys):
    status, out, _ = run_cli(capsys, "verify", "--suite", "recursion",
                             "--max-size", "2", "--degree", "2")
    assert status == 0
    assert out.splitlines()[-1] == "result: ok"
    status, out, _ = run_cli(capsys, "verify", "--suite", "fillings",
                             "--filling", "F4", "--max-size", "2",
                             "--degree", "2", "--format", "json")
    assert status == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert all(c["passed"] for c in payload["checks"])


def test_verify_deterministic_across_jobs(capsys):
    args = ["verify", "--suite", "skein", "--max-size", "3",
            "--degree", "3", "--format", "json"]
    status1, out1, _ = run_cli(capsys, *args, "--jobs", "1")
    status2, out2, _ = run_cli(capsys, *args, "--jobs", "3")
    assert status1 == status2 == 0
    assert out1 == out2
