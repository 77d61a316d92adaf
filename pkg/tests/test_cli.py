import json

import pytest

from ternions.cli import main, parse_ring
from ternions.reports import canonical_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_tables_t2(capsys, expected):
    code, out, _ = run(capsys, "tables", "--ring", "ternion:2")
    assert code == 0
    rows = [list(map(int, ln.split())) for ln in out.splitlines()[1:]]
    assert out.splitlines()[0] == "8"
    assert rows[:8] == expected["add_table"]
    assert rows[8:] == expected["mul_table"]


def test_tables_reload_identical(capsys, tmp_path):
    _, out, _ = run(capsys, "tables", "--ring", "ternion:3")
    path = tmp_path / "t3.txt"
    path.write_text(out)
    _, again, _ = run(capsys, "tables", "--ring", f"file:{path}")
    assert again == out


def test_reproduce_from_reloaded_tables(capsys, tmp_path):
    out_path = tmp_path / "t2.txt"
    assert main(["tables", "--out", str(out_path)]) == 0
    direct = run(capsys, "reproduce", "--paper")
    reloaded = run(capsys, "reproduce", "--paper", "--ring", f"file:{out_path}")
    assert direct[0] == reloaded[0] == 0
    assert direct[1] == reloaded[1]
    assert "FAIL" not in direct[1]


def test_reproduce_wrong_ring_fails(capsys):
    code, out, _ = run(capsys, "reproduce", "--paper", "--ring", "ternion:3")
    assert code == 1
    assert "FAIL" in out


def test_reproduce_summary(capsys):
    code, out, _ = run(capsys, "reproduce")
    assert code == 0
    assert "J = {0,6}" in out and "pairwise disjoint: False" in out


def test_ideals(capsys):
    code, out, _ = run(capsys, "ideals", "--ring", "ternion:2")
    assert code == 0
    assert "I1 = {0,4,6,7}" in out
    assert "I2 = {0,3,5,6}" in out
    assert "J = {0,6}" in out
    assert "6 with 0, 5 without" in out


def test_ideals_json_order16(capsys, order16_path):
    code, out, _ = run(capsys, "ideals", "--ring", f"file:{order16_path}", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["zero_divisor_count_with_zero"] == 12
    assert data["zero_divisor_count_without_zero"] == 11


def test_enumerate_field(capsys):
    code, out, _ = run(capsys, "enumerate", "--ring", "field:2", "--rank", "3")
    assert code == 0
    assert out.startswith("0 non-unimodular free cyclic submodules")


def test_enumerate_json_schema_and_roundtrip(capsys):
    code, out, _ = run(capsys, "enumerate", "--json")
    data = json.loads(out)
    assert code == 0 and len(data) == 21
    assert set(data[0]) == {"canonical_generator", "generators", "orbit", "orbit_size"}
    assert all(d["orbit_size"] == 8 for d in data)
    assert canonical_json(json.loads(out)) == out


@pytest.mark.parametrize("cmd", ["classify", "factorize", "ideals", "tables"])
def test_json_roundtrip(capsys, cmd):
    _, out, _ = run(capsys, cmd, "--format", "json")
    assert canonical_json(json.loads(out)) == out


def test_enumerate_csv(capsys):
    _, out, _ = run(capsys, "enumerate", "--csv")
    lines = out.splitlines()
    assert lines[0] == "canonical_generator,generators,orbit_size,orbit"
    assert len(lines) == 22


def test_classify_json(capsys):
    _, out, _ = run(capsys, "classify", "--json")
    data = json.loads(out)
    assert list(data) == ["2", "1", "0"]
    assert [data[k]["count"] for k in data] == [9, 9, 3]


def test_factorize_json(capsys):
    _, out, _ = run(capsys, "factorize", "--json")
    data = json.loads(out)
    assert {k: v["distinct_lines"] for k, v in data["induced"].items()} == {"2": 6, "1": 7, "0": 3}
    assert {k: len(v) for k, v in data["ordinary"].items()} == {"2": 3, "1": 3, "0": 1}
    assert data["induced_pairwise_disjoint"] is False
    assert data["ordinary_pairwise_disjoint"] is True


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export", "--format", "dot")
    assert code == 0
    assert out.startswith("graph ")
    assert '"s:4,4,7" [' in out
    assert '"l:(0,0,1)(1,1,0)(1,1,1)" [' in out
    assert out.count(" -- ") == 21


def test_out_flag(capsys, tmp_path):
    target = tmp_path / "ideals.txt"
    code, out, _ = run(capsys, "ideals", "--out", str(target))
    assert code == 0 and out == ""
    assert "J = {0,6}" in target.read_text()


def test_budget_rejected_up_front(capsys):
    code, out, err = run(capsys, "enumerate", "--ring", "ternion:3", "--budget", "100")
    assert code == 3 and out == ""
    assert json.loads(err)["error"] == "BudgetExceeded"


def test_bad_table_file(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2\n0 1\n1 0\n0 0\n0 0\n")
    code, out, err = run(capsys, "ideals", "--ring", f"file:{path}")
    assert code == 3 and out == ""
    assert json.loads(err)["error"] == "NoUnity"


def test_rank_too_small(capsys):
    code, _, err = run(capsys, "enumerate", "--rank", "1")
    assert code == 2
    assert "rank" in err


def test_bad_ring_source(capsys):
    code, _, err = run(capsys, "ideals", "--ring", "matrix:2")
    assert code == 2


def test_parse_ring_variants():
    assert parse_ring("field:2^2").order == 4
    assert parse_ring("field:4", (1, 1, 1)).order == 4
    assert parse_ring("ternion:2").name == "T(2)"
