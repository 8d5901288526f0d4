"""Unit tests for the coefficient-identity checks and verdict reporting."""

import doctest

import pytest

from altmmp import theorems
from altmmp.theorems import (
    CHECKS,
    CONFIRMED,
    CORRECTED,
    REFUTED,
    Verdict,
    check_highest,
    check_hypergeometric,
    check_lowest,
    check_relations,
    check_second_highest,
    check_series,
    check_symmetry,
    check_unimodality,
    check_x2,
    double_factorial,
    run_checks,
)


def assert_all_confirmed(verdicts):
    assert verdicts
    for v in verdicts:
        assert v.status == CONFIRMED, str(v)
        assert v.ok


def test_double_factorial():
    assert [double_factorial(m) for m in range(-1, 9)] == [
        1, 1, 1, 2, 3, 8, 15, 48, 105, 384,
    ]
    with pytest.raises(ValueError):
        double_factorial(-2)


def test_check_symmetry():
    verdicts = check_symmetry(5)
    assert len(verdicts) == 4
    assert_all_confirmed(verdicts)
    assert any("81 patterns" in v.checked for v in verdicts)


def test_check_lowest():
    verdicts = check_lowest(6)
    assert len(verdicts) == 4
    assert_all_confirmed(verdicts)


def test_check_highest():
    verdicts = check_highest(6)
    assert len(verdicts) == 5
    assert_all_confirmed(verdicts)


def test_check_second_highest():
    verdicts = check_second_highest(6)
    assert len(verdicts) == 5
    assert_all_confirmed(verdicts)


def test_check_x2_statuses():
    verdicts = check_x2(4)
    assert len(verdicts) == 4
    statuses = [v.status for v in verdicts]
    assert statuses.count(CONFIRMED) == 3
    assert statuses.count(CORRECTED) == 1
    corrected = next(v for v in verdicts if v.status == CORRECTED)
    assert corrected.ok
    # the corrected verdict names the failing value pair of the stated bound
    assert "formula 6, true value 9" in corrected.notes
    assert "bound n" in corrected.notes


def test_check_relations():
    verdicts = check_relations(5)
    assert len(verdicts) == 3
    assert_all_confirmed(verdicts)


def test_check_unimodality_reports_only():
    verdicts = check_unimodality(8)
    assert len(verdicts) == 8
    for v in verdicts:
        assert v.report_only
        assert v.status == CONFIRMED


def test_check_series():
    verdicts = check_series(9)
    assert len(verdicts) == 6
    assert_all_confirmed(verdicts)


def test_check_hypergeometric_is_a_report():
    (v,) = check_hypergeometric(9)
    assert v.report_only
    assert "rising" in v.notes and "falling" in v.notes
    assert v.ok


def test_verdict_ok_logic():
    refuted = Verdict("c", "n=1", REFUTED)
    assert not refuted.ok
    reported = Verdict("c", "n=1", REFUTED, report_only=True)
    assert reported.ok
    assert Verdict("c", "n=1", CONFIRMED).ok
    assert Verdict("c", "n=1", CORRECTED).ok


def test_synthetic_refutation_carries_counterexample():
    v = theorems._verdict("some claim", "n=1..4", [("n=2", 5, 7), ("n=3", 1, 1)])
    assert v.status == REFUTED
    assert v.counterexample == {"where": "n=2", "expected": "5", "actual": "7"}
    assert not v.ok
    assert "counterexample" in str(v)
    assert v.as_dict()["counterexample"]["where"] == "n=2"


def test_verdict_rendering():
    v = Verdict("a claim", "n=1..6", CONFIRMED, notes="extra detail")
    assert str(v) == "[confirmed] a claim; checked n=1..6  (extra detail)"
    d = v.as_dict()
    assert d["status"] == "confirmed"
    assert "counterexample" not in d


def test_checks_registry():
    assert sorted(CHECKS) == [
        "highest",
        "hypergeometric",
        "lowest",
        "relations",
        "second-highest",
        "series",
        "symmetry",
        "unimodality",
        "x2",
    ]


def test_run_checks_subset_and_defaults():
    verdicts = run_checks(["lowest", "x2"], n_max=3)
    assert len(verdicts) == 8
    assert all(v.ok for v in verdicts)


def test_run_checks_rejects_unknown_names():
    with pytest.raises(ValueError):
        run_checks(["nonsense"])


def test_doctests():
    assert doctest.testmod(theorems).failed == 0
