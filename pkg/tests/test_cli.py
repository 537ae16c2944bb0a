import json

import pytest

from saddles.cli import main
from saddles.report import ResultDocument, emit_result

A1_TEXT = "4 5\n2 1 0 1 2\n0 3 4 4 1\n0 2 2 1 2\n2 1 0 2 1\n"
A2_TEXT = "3 3\n0 0 0\n0 1 -1\n0 -1 1\n"


@pytest.fixture
def a1_file(tmp_path):
    path = tmp_path / "a1.game"
    path.write_text(A1_TEXT)
    return str(path)


@pytest.fixture
def a2_file(tmp_path):
    path = tmp_path / "a2.game"
    path.write_text(A2_TEXT)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_enumerate_text_labels(capsys, a1_file):
    code, out = run(capsys, "enumerate", a1_file)
    assert code == 0
    assert "{r1,r2} x {c1,c2,c3}" in out


def test_enumerate_json(capsys, a1_file):
    code, out = run(capsys, "enumerate", a1_file, "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["saddles"] == [[[0, 1], [0, 1, 2]]]
    assert doc["mode"] == "weak"
    assert doc["schema_version"] == "1"


def test_find_and_strict(capsys, a2_file):
    code, out = run(capsys, "find", a2_file, "--json")
    assert code == 0 and json.loads(out)["saddles"] == [[[0], [0]]]
    code, out = run(capsys, "strict", a2_file, "--json")
    assert code == 0 and json.loads(out)["saddles"] == [[[0, 1, 2], [0, 1, 2]]]


def test_value_json(capsys, a2_file):
    code, out = run(capsys, "value", a2_file, "--json")
    assert code == 0
    assert json.loads(out)["value"] == "0"


def test_value_fraction(capsys, a1_file):
    code, out = run(capsys, "value", a1_file, "--json")
    assert json.loads(out)["value"] == "4/3"


def test_nash_strategies_are_rational_strings(capsys, a1_file):
    code, out = run(capsys, "nash", a1_file, "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["value"] == "4/3"
    assert len(doc["strategies"]["row"]) == 4
    assert len(doc["strategies"]["col"]) == 5
    assert all(isinstance(tok, str) for tok in doc["strategies"]["row"])


def test_check_ok(capsys, a2_file):
    code, out = run(capsys, "check", a2_file, "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["verdicts"]["interchangeability"] is True
    assert doc["verdicts"]["equivalence"] is True


def test_check_weak_strict_counterexample_exits_1(capsys, tmp_path):
    # Restriction of the 3x3 golden game to its first two rows and columns.
    path = tmp_path / "sub.game"
    path.write_text("2 2\n0 0\n0 1\n")
    code, out = run(capsys, "check", str(path), "--mode", "weak-strict", "--json")
    doc = json.loads(out)
    assert code == 1
    assert doc["verdicts"]["equivalence"] is False
    assert doc["verdicts"]["violations"]


def test_stdin_input(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(A2_TEXT))
    code, out = run(capsys, "value", "-", "--json")
    assert code == 0
    assert json.loads(out)["value"] == "0"


def test_parse_error_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.game"
    path.write_text("2 2\n1 2 3\n")
    code = main(["value", str(path)])
    assert code == 2


def test_missing_file_exit_code(capsys):
    assert main(["value", "/nonexistent/path.game"]) == 2


def test_capacity_error_exit_code(capsys, tmp_path):
    path = tmp_path / "big.game"
    rows = 13
    body = "\n".join(" ".join("1" for _ in range(2)) for _ in range(rows))
    path.write_text(f"{rows} 2\n{body}\n")
    assert main(["enumerate", str(path)]) == 2
    assert main(["enumerate", str(path), "--size-guard", "13"]) == 0
    capsys.readouterr()


def test_verify_json_deterministic(capsys):
    argv = [
        "verify", "--trials", "10", "--rows", "4", "--cols", "4",
        "--gen", "uniform", "--bound", "3", "--seed", "5", "--json",
    ]
    code1, out1 = run(capsys, *argv)
    code2, out2 = run(capsys, *argv, "--jobs", "2")
    assert code1 == code2 == 0
    doc1, doc2 = json.loads(out1), json.loads(out2)
    doc1.pop("duration_seconds")
    doc2.pop("duration_seconds")
    assert doc1 == doc2


def test_verify_text_output(capsys):
    code, out = run(
        capsys,
        "verify", "--trials", "5", "--rows", "4", "--cols", "4",
        "--gen", "tournament", "--bound", "1", "--seed", "3",
    )
    assert code == 0
    assert "confrontation_unique: 5 passed, 0 failed" in out
    assert "all checks passed" in out


def test_verify_bad_check_token(capsys):
    code = main(
        [
            "verify", "--trials", "2", "--rows", "3", "--cols", "3",
            "--gen", "uniform", "--seed", "1", "--checks", "bogus",
        ]
    )
    assert code == 2
    capsys.readouterr()


def test_emit_empty_document_has_empty_arrays():
    doc = json.loads(emit_result(ResultDocument(), "json"))
    assert doc["saddles"] == []
    assert doc["verdicts"] == {}
    assert doc["value"] is None


def test_emit_text_value():
    doc = ResultDocument(game_digest="abc123", value="4/3")
    text = emit_result(doc, "text")
    assert "value: 4/3" in text


def test_json_output_byte_identical(capsys, a1_file):
    _, out1 = run(capsys, "check", a1_file, "--json")
    _, out2 = run(capsys, "check", a1_file, "--json")
    assert out1 == out2
