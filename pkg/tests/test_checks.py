import pytest

from pystirling import checks
from pystirling.checks import (
    SUITES, CheckResult, Status, SuiteOptions, all_passed, format_report, run_suites,
)
from pystirling.config import Config
from pystirling.oracles import oracle_count
from pystirling.triangle import Triangle, identity_triangle


@pytest.mark.parametrize("suite", [name for name in SUITES if name != "oracles"])
def test_suites_pass_at_small_order(suite):
    results = run_suites(suite, SuiteOptions(max_n=6))
    assert results
    assert all(result.status is Status.PASS for result in results), format_report(results)


def test_oracle_suite_passes():
    results = run_suites("oracles", SuiteOptions(oracle_max_n=4))
    assert all(result.status is Status.PASS for result in results), format_report(results)


def test_oracles_above_bound_are_skipped():
    config = Config(oracle_max_n=3, oracle_pair_max_n=2)
    results = run_suites("oracles", SuiteOptions(config=config, oracle_max_n=3))
    skipped = [r for r in results if r.status is Status.SKIPPED]
    assert skipped
    assert all("exceeds enumeration bound" in r.detail for r in skipped)
    assert all_passed(results)


def test_all_at_order_zero():
    results = run_suites("all", SuiteOptions(max_n=0, oracle_max_n=2))
    assert {result.suite for result in results} == set(SUITES)
    assert all_passed(results)


def test_order_override():
    options = SuiteOptions(config=Config(recurrence_max_n=9))
    assert options.order(options.config.recurrence_max_n) == 9
    assert SuiteOptions(max_n=3).order(30) == 3


def test_report_and_failures():
    results = [
        CheckResult("recurrences", "(C,C) recurrence = product", Status.PASS),
        CheckResult("oracles", "permutation-pairs n=9", Status.SKIPPED, "too big"),
        CheckResult("bases", "bell -> falling change matrix", Status.FAIL, "(2,1): 3 != 4"),
    ]
    report = format_report(results)
    assert "FAIL     bases" in report
    assert "[(2,1): 3 != 4]" in report
    assert report.endswith("3 checks, 1 failed, 1 skipped\n")
    assert not all_passed(results)
    assert all_passed(results[:2])


def test_all_suites_at_configured_orders():
    results = run_suites("all", SuiteOptions())
    assert all_passed(results), format_report(results)
    assert not [r for r in results if r.status is Status.SKIPPED]


def test_truncation_cuts_below_the_top_row():
    [result] = run_suites("truncation", SuiteOptions(max_n=6))
    assert result.identity == "truncate(build(6), 5) = build(5)"
    [result] = run_suites("truncation", SuiteOptions())
    assert result.identity == "truncate(build(25), 12) = build(12)"


def test_truncation_catches_order_dependent_builder(monkeypatch):
    def drifting(pair, last):
        return Triangle(((last + 1,),) + identity_triangle(last).rows[1:])

    monkeypatch.setattr(checks, "composite_recurrence", drifting)
    [result] = run_suites("truncation", SuiteOptions(max_n=6))
    assert result.status is Status.FAIL
    assert "recurrence" in result.detail


def test_max_n_caps_oracle_enumeration(monkeypatch):
    seen = []

    def recording(kind, n, m, limit=None):
        seen.append(n)
        return oracle_count(kind, n, m, limit)

    monkeypatch.setattr(checks, "oracle_count", recording)
    results = run_suites("oracles", SuiteOptions(max_n=2))
    assert all_passed(results), format_report(results)
    assert not [r for r in results if r.status is Status.SKIPPED]
    assert max(seen) == 2


def test_oracle_order():
    assert SuiteOptions().oracle_order(8) == 8
    assert SuiteOptions(max_n=3).oracle_order(8) == 3
    assert SuiteOptions(max_n=20).oracle_order(7) == 7
    assert SuiteOptions(max_n=3, oracle_max_n=5).oracle_order(8) == 5
