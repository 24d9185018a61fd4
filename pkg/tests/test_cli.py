import json

import pytest

from unexpected_curves import reproduce
from unexpected_curves.cli import main
from unexpected_curves.fixtures import curve_text


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_reference_curve(capsys):
    code, out, _ = run(capsys, "construct", "--config", "b3", "--k", "2", "--d", "2",
                       "--line", "-12,10,7", "--syzygy-index", "1")
    assert code == 0
    assert "C = 49*x^3*y + 168*x^2*y*z - 49*x*y^3 + 140*x*y^2*z + 44*x*y*z^2" in out


def test_unexpected_df4_json(capsys):
    code, out, _ = run(capsys, "unexpected", "--config", "dfn", "--n", "4", "--d", "5", "--k", "2",
                       "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert (data["direct"], data["actual_dim"], data["expected_dim"]) == (True, 3, 2)
    assert data["type"] == [7, 5] and data["epsilon"] is True


def test_dimtable_b3(capsys):
    code, out, _ = run(capsys, "dimtable", "--config", "b3", "--k", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["splitting"] == [3, 5]
    assert [data["D"][str(j)] for j in range(3, 7)] == [1, 2, 4, 6]


def test_table_is_deterministic(capsys):
    _, first, _ = run(capsys, "table", "--config", "dfn", "--n", "3")
    _, second, _ = run(capsys, "table", "--config", "dfn", "--n", "3")
    assert first == second
    assert "4,7" in first and "(5,4)" in first and "non-convergent" in first


def test_table_parallel_matches_serial(capsys):
    _, serial, _ = run(capsys, "table", "--config", "b3", "--format", "json")
    _, parallel, _ = run(capsys, "table", "--config", "b3", "--format", "json", "--jobs", "2")
    assert serial == parallel
    rows = json.loads(serial)["rows"]
    assert rows[0]["exponents"] == [3, 5] and rows[0]["unexpected"] == [{"type": [4, 3], "starred": False}]


def test_splitting_and_out_file(capsys, tmp_path):
    out = tmp_path / "st.json"
    code, _, _ = run(capsys, "splitting", "--config", "dfn", "--n", "4", "--k", "3",
                     "--format", "json", "--out", str(out))
    assert code == 0
    assert json.loads(out.read_text())["exponents"] == [3, 3, 3, 4]


def test_syzygies_with_lift(capsys):
    code, out, _ = run(capsys, "syzygies", "--config", "b3", "--k", "1", "--d", "3", "--lift", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["basis"]) == 1
    assert data["basis"][0]["lift_verified"]


def test_verify_fixture_file(capsys, tmp_path):
    path = tmp_path / "c.txt"
    path.write_text(curve_text("C_5_8_5"))
    code, out, _ = run(capsys, "verify", "--config", "dfn", "--n", "5", "--curve-file", str(path),
                       "--point", "2/3,-7,5", "--d", "5", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["mult_at_P"] == 5
    assert data["profile"] == {"1": 26, "2": 2}


def test_exit_codes(capsys):
    assert run(capsys, "table")[0] == 2
    assert run(capsys, "table", "--config", "dfn")[0] == 2
    assert run(capsys, "splitting", "--config", "b3")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    # (1, 1, 1) passes through vertices of the B3 arrangement
    assert run(capsys, "construct", "--config", "b3", "--k", "1", "--d", "3", "--line", "1,1,1")[0] == 4
    assert run(capsys, "splitting", "--config", "b3", "--k", "4")[0] == 3


def test_seed_env_override(capsys, monkeypatch):
    monkeypatch.setenv("UNEXPECTED_CURVES_SEED", "5")
    _, env_out, _ = run(capsys, "syzygies", "--config", "b3", "--k", "1", "--d", "3", "--format", "json")
    monkeypatch.delenv("UNEXPECTED_CURVES_SEED")
    _, flag_out, _ = run(capsys, "syzygies", "--config", "b3", "--k", "1", "--d", "3", "--seed", "5",
                         "--format", "json")
    _, default_out, _ = run(capsys, "syzygies", "--config", "b3", "--k", "1", "--d", "3", "--format", "json")
    assert env_out == flag_out != default_out
    monkeypatch.setenv("UNEXPECTED_CURVES_SEED", "abc")
    assert run(capsys, "splitting", "--config", "b3", "--k", "1")[0] == 2


def test_reproduce_filter_b3(capsys):
    code, out, _ = run(capsys, "reproduce", "--filter", "b3")
    lines = [l for l in out.splitlines() if l.startswith("[")]
    assert code == 0 and len(lines) == 3
    assert all(l.startswith("[PASS]") for l in lines)
    assert all("DF" not in l for l in lines)


def test_corrupted_fixture_is_named(capsys, monkeypatch):
    real = reproduce.curve_text
    monkeypatch.setattr(reproduce, "curve_text", lambda name: real(name).replace("x^7", "x^6*y", 1))
    code, out, _ = run(capsys, "reproduce", "--filter", "fixture_C_5_8_5")
    assert code == 1
    assert "[FAIL] 6.fixture_C_5_8_5" in out
