"""Tests for the command-line interface."""

import csv
import io
import json

import pytest

import montesinos.cli as cli


def _run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_slopes_table(capsys):
    code, out, err = _run(capsys, "slopes", "P(2,-3,5)")
    assert code == 0
    assert "32/5" in out
    assert "# seifert twist -2" in out
    assert err == ""


def test_slopes_quiet_drops_comments(capsys):
    _, out, _ = _run(capsys, "slopes", "P(2,-3,5)", "--quiet")
    assert "#" not in out
    assert "32/5" in out


def test_csv_and_json_agree_field_by_field(capsys):
    _, csv_out, _ = _run(capsys, "slopes", "P(2,-3,5)", "--format", "csv", "--quiet")
    _, json_out, _ = _run(capsys, "slopes", "P(2,-3,5)", "--format", "json")
    csv_rows = list(csv.DictReader(io.StringIO(csv_out)))
    doc = json.loads(json_out)
    assert len(csv_rows) == len(doc["surfaces"])
    for csv_row, json_row in zip(csv_rows, doc["surfaces"]):
        for field in csv_row:
            json_value = json_row[field]
            if isinstance(json_value, bool):
                json_value = "true" if json_value else "false"
            assert csv_row[field] == str(json_value)


def test_json_schema(capsys):
    _, out, _ = _run(capsys, "slopes", "K(1/5,2/3,-1/2)", "--format", "json")
    doc = json.loads(out)
    assert list(doc.keys()) == [
        "knot",
        "canonical",
        "predicates",
        "seifert_twist",
        "slope_basis",
        "surfaces",
    ]
    assert doc["knot"] == "K(1/5,2/3,-1/2)"
    assert doc["seifert_twist"] == "-2"
    assert doc["slope_basis"] == "seifert"
    assert any(row["slope"] == "32/5" for row in doc["surfaces"])
    for row in doc["surfaces"]:
        assert list(row.keys()) == [
            "slope",
            "euler",
            "r_cycle",
            "incompressibility",
            "seifert",
            "sheets",
            "system_kind",
        ]


def test_output_is_deterministic(capsys):
    runs = []
    for _ in range(2):
        _, out, _ = _run(capsys, "slopes", "K(1/2,1/3,1/5)", "--format", "json")
        runs.append(out)
    assert runs[0] == runs[1]


def test_include_unknown_flag_adds_rows(capsys):
    _, base, _ = _run(capsys, "slopes", "P(2,-3,5)", "--format", "csv", "--quiet")
    _, full, _ = _run(
        capsys,
        "slopes",
        "P(2,-3,5)",
        "--format",
        "csv",
        "--quiet",
        "--include-unknown-incompressibility",
    )
    assert len(full.splitlines()) > len(base.splitlines())


def test_twist_only_basis_without_even_denominator(capsys):
    _, out, _ = _run(capsys, "slopes", "K(1/3,1/3,1/3)", "--format", "json")
    doc = json.loads(out)
    assert doc["seifert_twist"] is None
    assert doc["slope_basis"] == "twist-only"


def test_classify(capsys):
    code, out, _ = _run(capsys, "classify", "K(1/2,-1/3,1/7)")
    assert code == 0
    assert "hyperbolic: true" in out
    assert "one_one: true" in out
    assert "torus: false" in out
    assert "canonical_vector: (1/7,1/2,2/3)" in out
    code, out, _ = _run(capsys, "classify", "P(-2,3,5)")
    assert "torus: true" in out
    assert "hyperbolic: false" in out


def test_classify_json_matches_table(capsys):
    _, out, _ = _run(capsys, "classify", "K(1/2,-1/3,1/7)", "--format", "json")
    doc = json.loads(out)
    assert doc["predicates"]["hyperbolic"] is True
    assert doc["predicates"]["one_one"] is True
    assert doc["predicates"]["pretzel"] == [2, -3, 7]
    assert doc["canonical"]["sum"] == "13/42"


def test_seifert_command(capsys):
    code, out, _ = _run(capsys, "seifert", "P(2,-3,5)")
    assert code == 0
    assert "seifert_twist: -2" in out
    assert "<inf>" in out
    _, json_out, _ = _run(capsys, "seifert", "P(2,-3,5)", "--format", "json")
    doc = json.loads(json_out)
    assert doc["seifert_twist"] == "-2"
    assert sorted(doc["penultimate_vertices"]) == [-1, 0, 1]


def test_verify_theorem(capsys):
    code, out, _ = _run(capsys, "verify-theorem", "--n-max", "7")
    assert code == 0
    for n in (3, 5, 7):
        assert f"n={n} PASS" in out
    assert "verify-theorem: PASS" in out


def test_verify_theorem_failure_exit_code(capsys, monkeypatch):
    import montesinos.surface as surface_mod

    empty = surface_mod.SlopeReport(
        knot=cli.parse("P(2,-3,3)"), surfaces=(), seifert_twist=None, seifert_note="x"
    )
    monkeypatch.setattr(cli, "slope_report", lambda knot: empty)
    code, out, _ = _run(capsys, "verify-theorem", "--n-max", "3")
    assert code == 1
    assert "FAIL" in out


def test_input_errors_exit_2(capsys):
    for bad in ["K(1/2,1/2,1/3)", "nonsense", "K(2/4,1/3,1/2)"]:
        code, out, err = _run(capsys, "slopes", bad)
        assert code == 2
        assert out == ""
        assert "error:" in err


def test_seifert_unavailable_is_input_error(capsys):
    code, _, err = _run(capsys, "seifert", "K(1/3,1/3,1/3)")
    assert code == 2
    assert "error:" in err
