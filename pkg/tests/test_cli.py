import csv
import io
import json

import pytest

from cyclic_embed.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_embed_a5_csv(capsys):
    code, out, _ = run(capsys, "embed", "--algorithm", "A", "--s", "5", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 1
    row = rows[0]
    assert row["wl_distance"] == row["wl_cuts"] == row["wl_formula"] == "320"
    assert row["distance_equals_cuts"] == row["all_cuts_verified"] == "true"


def test_build_col_dot(capsys):
    code, out, _ = run(capsys, "build", "--family", "col", "--l", "4", "--r", "3", "--format", "dot")
    assert code == 0
    assert out.count(" -- ") == 44
    # vertex statements are the lines with attributes but no edge
    nodes = [ln for ln in out.splitlines() if "[" in ln and " -- " not in ln]
    assert len(nodes) == 32


def test_oracle_fq3(capsys):
    code, out, _ = run(capsys, "oracle", "--guest", "fq3", "--host", "col:4,0")
    assert code == 0
    obj = json.loads(out)
    assert obj["minimum_wirelength"] == 32
    assert len(obj["witness_map"]) == 8


def test_build_json_and_designator(capsys):
    code, out, _ = run(capsys, "build", "--family", "circ:8,1,2")
    assert code == 0
    assert json.loads(out)["n"] == 8


def test_verify_passes_for_a(capsys):
    code, out, _ = run(capsys, "verify", "--algorithm", "A", "--s", "4")
    assert code == 0
    obj = json.loads(out)
    assert obj[0]["wl_distance"] == 96
    assert len(obj[0]["verdicts"]) == 8
    assert all(v["holds"] for v in obj[0]["verdicts"])


def test_verify_names_failing_flag(capsys):
    code, _, err = run(capsys, "verify", "--algorithm", "B", "--n", "20", "--j", "2", "--k", "4", "--m", "4")
    assert code == 1
    assert "formula_agrees" in err


def test_usage_errors(capsys):
    assert run(capsys, "embed", "--algorithm", "B", "--n", "16", "--j", "1", "--k", "3", "--m", "4")[0] == 2
    assert run(capsys, "build", "--family", "zz3")[0] == 2
    assert run(capsys, "embed", "--algorithm", "A")[0] == 2
    with pytest.raises(SystemExit):
        main(["nonsense"])
    capsys.readouterr()


def test_budget_refusal_exit(capsys):
    code, _, err = run(capsys, "oracle", "--guest", "fq3", "--host", "col:4,0", "--budget", "10")
    assert code == 3 and "budget" in err


def test_out_file_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["embed", "--algorithm", "B", "--n", "12", "--j", "2", "--k", "3", "--m", "3", "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())
