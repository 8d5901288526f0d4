"""End-to-end tests for the command-line interface."""

import csv
import io
import json
import subprocess
import sys

import pytest

from altmmp import cli
from altmmp.polynomials import Poly
from altmmp.recurrences import Family, barred_poly, family_poly
from altmmp.theorems import REFUTED, Verdict

from _tables import TABLES_10E0


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dist_text(capsys):
    code, out, err = run_cli(
        capsys, "dist", "--class", "UD", "--n", "5", "--pattern", "1,0,e,0"
    )
    assert code == 0 and err == ""
    assert out == "7x + 9x^2\n"


def test_dist_json_shape(capsys):
    code, out, _ = run_cli(
        capsys,
        "dist", "--class", "DU", "--n", "4", "--pattern", "1,0,e,0",
        "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"n", "class", "pattern", "coeffs"}
    assert doc["n"] == 4 and doc["class"] == "DU" and doc["pattern"] == "1,0,e,0"
    assert Poly.from_strings(doc["coeffs"]) == Poly([0, 2, 3])


def test_dist_csv(capsys):
    code, out, _ = run_cli(
        capsys,
        "dist", "--class", "UD", "--n", "4", "--pattern", "1,0,e,0",
        "--format", "csv",
    )
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["power"] for r in rows] == ["0", "1", "2"]
    assert [r["coefficient"] for r in rows] == ["0", "2", "3"]


def test_dist_all_methods_agree(capsys):
    code, out, _ = run_cli(
        capsys,
        "dist", "--class", "UD", "--n", "6", "--pattern", "1,0,e,0",
        "--method", "all",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("oracle: ")
    assert lines[1].startswith("recursion: ")
    assert lines[2].startswith("series: ")
    assert lines[3] == "agreement: yes"
    assert len({line.split(": ", 1)[1] for line in lines[:3]}) == 1


def test_dist_all_methods_disagreement_fails(capsys, monkeypatch):
    monkeypatch.setattr(cli, "family_poly", lambda fam, n: Poly([0, 99]))
    code, out, err = run_cli(
        capsys,
        "dist", "--class", "UD", "--n", "4", "--pattern", "1,0,e,0",
        "--method", "all",
    )
    assert code == 1
    assert out == ""
    assert "agreement: no" in err
    assert "recursion: 99x" in err


def test_dist_oracle_only_pattern(capsys):
    # patterns without a recursion still work through enumeration
    code, out, _ = run_cli(
        capsys, "dist", "--class", "DU", "--n", "5", "--pattern", "0,1,2,e"
    )
    assert code == 0
    from altmmp.patterns import QuadrantPattern, distribution
    from altmmp.permutations import DOWN_UP

    expected = distribution(5, DOWN_UP, QuadrantPattern(0, 1, 2, None))
    assert out == f"{expected}\n"


def test_dist_usage_errors(capsys):
    for argv in (
        ["dist", "--class", "UD", "--n", "0", "--pattern", "1,0,e,0"],
        ["dist", "--class", "UD", "--n", "3", "--pattern", "1,0,e"],
        ["dist", "--class", "UD", "--n", "3", "--pattern", "2,0,0,0", "--method", "recursion"],
    ):
        code, _, err = run_cli(capsys, *argv)
        assert code == 2
        assert err.startswith("error:")


def test_dist_rejects_bad_choices():
    with pytest.raises(SystemExit) as exc:
        cli.main(["dist", "--class", "XX", "--n", "3", "--pattern", "1,0,e,0"])
    assert exc.value.code == 2


def test_budget_flag_and_env(capsys, monkeypatch):
    code, _, err = run_cli(
        capsys,
        "dist", "--class", "UD", "--n", "6", "--pattern", "1,0,e,0",
        "--budget", "5", "--method", "oracle",
    )
    assert code == 2 and "budget" in err

    monkeypatch.setenv("MMP_BUDGET", "4")
    code, _, err = run_cli(
        capsys,
        "dist", "--class", "UD", "--n", "5", "--pattern", "1,0,e,0",
        "--method", "oracle",
    )
    assert code == 2 and "budget" in err

    # explicit flag wins over the environment
    code, out, _ = run_cli(
        capsys,
        "dist", "--class", "UD", "--n", "5", "--pattern", "1,0,e,0",
        "--method", "oracle", "--budget", "6",
    )
    assert code == 0 and out == "7x + 9x^2\n"

    monkeypatch.setenv("MMP_BUDGET", "abc")
    code, _, err = run_cli(
        capsys, "dist", "--class", "UD", "--n", "3", "--pattern", "1,0,e,0"
    )
    assert code == 2 and "MMP_BUDGET" in err


def test_sharded_output_is_byte_identical(capsys):
    base = run_cli(
        capsys, "dist", "--class", "DU", "--n", "8", "--pattern", "1,0,e,0"
    )
    sharded = run_cli(
        capsys,
        "dist", "--class", "DU", "--n", "8", "--pattern", "1,0,e,0",
        "--shards", "4",
    )
    assert base == sharded


def test_table_text_matches_frozen_tables(capsys):
    for letter in "ABCD":
        fam = Family(letter)
        code, out, _ = run_cli(capsys, "table", "--family", letter)
        assert code == 0
        expected_rows = {fam.length(r): r for r in range(7)}
        lines = out.splitlines()
        assert len(lines) == 7
        for line, (length, r) in zip(lines, sorted(expected_rows.items())):
            poly = Poly(TABLES_10E0[letter][length])
            assert line == f"{r}\t{poly}"


def test_table_row_range(capsys):
    code, out, _ = run_cli(capsys, "table", "--family", "A", "--rows", "2..3")
    assert code == 0
    assert out.splitlines() == ["2\t2x + 3x^2", "3\t16x + 30x^2 + 15x^3"]
    code, _, err = run_cli(capsys, "table", "--family", "A", "--rows", "3..1")
    assert code == 2 and "row range" in err


def test_table_json_round_trip(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--family", "B", "--rows", "0..5", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["family"] == "B" and doc["pattern"] == "1,0,e,0"
    for row in doc["rows"]:
        assert row["length"] == 2 * row["n"] + 1
        assert Poly.from_strings(row["coeffs"]) == family_poly(Family.B, row["length"])


def test_table_csv(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--family", "A", "--rows", "0..2", "--format", "csv"
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "length", "coeffs"]
    assert rows[1] == ["0", "0", "1"]
    assert rows[3] == ["2", "4", "0 2 3"]


def test_table_barred_methods_agree(capsys):
    for method in ("oracle", "recursion", "series", "all"):
        code, out, _ = run_cli(
            capsys, "table", "--family", "Dbar", "--rows", "0..3", "--method", method
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[1] == f"1\t{barred_poly(Family.DBAR, 3)}"


def test_series_text_shows_egf_numerators(capsys):
    # each line is n! times the t^n coefficient, i.e. the length-n polynomial
    code, out, _ = run_cli(capsys, "series", "--family", "A", "--order", "4")
    assert code == 0
    assert out.splitlines() == ["t^0\t1", "t^1\t0", "t^2\tx", "t^3\t0", "t^4\t2x + 3x^2"]


def test_series_json(capsys):
    code, out, _ = run_cli(
        capsys, "series", "--family", "D", "--order", "5", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["family"] == "D"
    egf = doc["egf"]
    assert Poly.from_strings(egf["3"]) == family_poly(Family.D, 3)
    assert Poly.from_strings(egf["5"]) == family_poly(Family.D, 5)
    assert egf["2"] == []


def test_verify_all_ok(capsys):
    code, out, _ = run_cli(capsys, "verify", "lowest", "x2", "--n", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1].startswith("summary: ")
    assert "7 confirmed, 1 corrected, 0 refuted" in lines[-1]
    assert sum(1 for line in lines if line.startswith("[confirmed")) == 8


def test_verify_json(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "lowest", "--n", "3", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True
    assert len(doc["verdicts"]) == 4
    assert all(v["status"] == "confirmed" for v in doc["verdicts"])


def test_verify_refutation_sets_exit_code(capsys, monkeypatch):
    fake = [Verdict("broken claim", "n=1..2", REFUTED,
                    counterexample={"where": "n=2", "expected": "1", "actual": "2"})]
    monkeypatch.setattr(cli, "run_checks", lambda *a, **k: fake)
    code, out, _ = run_cli(capsys, "verify", "lowest")
    assert code == 1
    assert "[refuted] broken claim" in out
    assert "summary: 0 confirmed, 0 corrected, 1 refuted" in out


def test_verify_unknown_check(capsys):
    code, _, err = run_cli(capsys, "verify", "nonsense")
    assert code == 2 and "nonsense" in err


def test_export_requires_machine_format(capsys):
    code, _, err = run_cli(
        capsys, "export", "--what", "table", "--family", "A", "--format", "text"
    )
    assert code == 2 and "json or csv" in err


def test_export_missing_flags(capsys):
    code, _, err = run_cli(capsys, "export", "--what", "dist", "--format", "json")
    assert code == 2 and "--n" in err


def test_export_matches_direct_subcommands(capsys):
    direct = run_cli(
        capsys, "table", "--family", "C", "--rows", "0..4", "--format", "json"
    )
    exported = run_cli(
        capsys,
        "export", "--what", "table", "--family", "C", "--rows", "0..4",
        "--format", "json",
    )
    assert direct == exported

    direct = run_cli(
        capsys,
        "dist", "--class", "UD", "--n", "5", "--pattern", "1,0,e,0",
        "--format", "csv",
    )
    exported = run_cli(
        capsys,
        "export", "--what", "dist", "--class", "UD", "--n", "5",
        "--pattern", "1,0,e,0", "--format", "csv",
    )
    assert direct == exported


def test_export_verify_and_series(capsys):
    code, out, _ = run_cli(
        capsys, "export", "--what", "verify", "lowest", "--n", "3",
        "--format", "json",
    )
    assert code == 0 and json.loads(out)["ok"] is True
    code, out, _ = run_cli(
        capsys, "export", "--what", "series", "--family", "A", "--order", "4",
        "--format", "csv",
    )
    assert code == 0
    assert out.splitlines()[0] == "t_power,coeffs"
    assert out.splitlines()[3] == "2,0 1"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "altmmp", "--help"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "dist" in proc.stdout and "verify" in proc.stdout


def test_module_entry_point_computes():
    proc = subprocess.run(
        [
            sys.executable, "-m", "altmmp",
            "dist", "--class", "UD", "--n", "6", "--pattern", "1,0,e,0",
            "--format", "json",
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert Poly.from_strings(doc["coeffs"]) == Poly([0, 16, 30, 15])
