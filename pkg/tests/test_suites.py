"""The verification harness: determinism, report round-trips, and the
corrupted-oracle self-test."""

import json

import pytest

from realroots import (
    Polynomial,
    UnknownSuiteError,
    VerificationReport,
    report_from_json_dict,
    run_suite,
    suite_names,
)
from realroots import suites as suites_module


def test_registry_contains_required_ids():
    names = suite_names()
    for required in (
        "schur",
        "diamond-closure",
        "diamond-interlace",
        "chain",
        "sp-deletion",
        "ferrers",
        "ns-small",
        "lphi-identity",
        "alt-product",
        "all",
    ):
        assert required in names


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        run_suite("no-such-suite")


def test_small_runs_pass():
    # trimmed sample counts keep this quick; full budgets run in acceptance
    for name in ("schur", "diamond-closure", "diamond-interlace", "chain"):
        report = run_suite(name, max_n=4, samples=8, seed=3)
        assert report.passed, report.failures
        assert report.instances == 8

    for name in ("lphi-identity", "alt-product", "log-concavity", "hermite-poulain"):
        report = run_suite(name, max_n=4, samples=8, seed=3)
        assert report.passed, report.failures

    report = run_suite("sp-deletion", max_n=5, samples=10, seed=3)
    assert report.passed and report.instances == 10

    report = run_suite("e-operator", max_n=5, samples=8, seed=3)
    assert report.passed

    report = run_suite("ordinal-sum", max_n=4, samples=6, seed=3)
    assert report.passed and report.instances == 12


def test_exhaustive_suites_small():
    report = run_suite("ferrers", max_n=4)
    assert report.passed and report.instances == 11  # partitions of 1..4

    report = run_suite("ns-small", max_n=3)
    assert report.passed
    assert report.instances == 1 + 1 + 3 * 2 + 19 * 6  # labelled posets, n <= 3


def test_reports_are_deterministic():
    a = run_suite("schur", max_n=5, samples=12, seed=9)
    b = run_suite("schur", max_n=5, samples=12, seed=9)
    assert a == b
    assert a.to_json() == b.to_json()
    c = run_suite("schur", max_n=5, samples=12, seed=10)
    assert c != a


def test_report_json_roundtrip():
    report = run_suite("ferrers", max_n=3)
    parsed = report_from_json_dict(json.loads(report.to_json()))
    assert parsed == report


def test_report_schema_keys():
    report = run_suite("log-concavity", max_n=4, samples=5, seed=0)
    data = json.loads(report.to_json())
    for key in ("suite", "seed", "instances", "failures"):
        assert key in data


def test_failure_records_carry_reproduction_data(monkeypatch):
    # corrupt one oracle: the harness must catch the lie and report it
    def broken_schur(f: Polynomial, g: Polynomial) -> Polynomial:
        return Polynomial([1, 1, 1])  # not real-rooted

    monkeypatch.setattr(suites_module.tr, "schur_product", broken_schur)
    report = run_suite("schur", max_n=4, samples=5, seed=0)
    assert not report.passed
    failure = report.failures[0]
    assert set(failure) == {"inputs", "expected", "got"}
    assert "f" in failure["inputs"] and "g" in failure["inputs"]


def test_corrupted_oracle_in_all_merge(monkeypatch):
    def broken_log_concavity(f: Polynomial):
        return 1  # claim every polynomial violates

    monkeypatch.setattr(suites_module.rt, "log_concavity_check", broken_log_concavity)
    # keep the merged run fast: shrink every suite's defaults
    slim = {
        name: (fn, min(max_n, 3), min(samples, 3))
        for name, (fn, max_n, samples) in suites_module.SUITES.items()
    }
    monkeypatch.setattr(suites_module, "SUITES", slim)
    report = run_suite("all", seed=0)
    assert not report.passed
    assert any(f["inputs"].get("suite") == "log-concavity" for f in report.failures)


def test_failures_sorted_canonically():
    failures = [
        {"inputs": {"f": "9"}, "expected": "a", "got": "b"},
        {"inputs": {"f": "1"}, "expected": "a", "got": "b"},
    ]
    ordered = suites_module._canonical(failures)
    assert [f["inputs"]["f"] for f in ordered] == ["1", "9"]


def test_report_passed_property():
    good = VerificationReport("x", 0, 1, 1, 1, ())
    bad = VerificationReport("x", 0, 1, 1, 1, ({"inputs": {}, "expected": "", "got": ""},))
    assert good.passed and not bad.passed
