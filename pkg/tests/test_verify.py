import pytest

from centtype import TooLarge, UnknownSuite, run_suite, suite_names
from centtype.serialize import verify_report_to_json


def test_suite_registry():
    names = suite_names()
    assert set(names) == {
        "centdim",
        "nilpclass",
        "dominance",
        "main-theorem-f2",
        "witness-roundtrip",
        "sn-oracle",
        "an-oracle",
        "partition-formulas",
        "jc",
        "extension-separable",
    }
    with pytest.raises(UnknownSuite):
        run_suite("bogus")


def test_report_shape():
    rep = run_suite("partition-formulas", seed=1)
    assert rep.passed
    assert rep.suite == "partition-formulas"
    assert rep.failures == ()
    assert rep.instances_checked == 271
    assert rep.elapsed >= 0
    j = verify_report_to_json(rep)
    assert set(j) == {"suite", "seed", "scale", "instances_checked", "failures"}


def test_determinism_same_seed():
    a = run_suite("nilpclass", seed=5)
    b = run_suite("nilpclass", seed=5)
    assert a.instances_checked == b.instances_checked
    assert a.failures == b.failures
    assert verify_report_to_json(a) == verify_report_to_json(b)


def test_jobs_do_not_change_results():
    a = run_suite("dominance", seed=2, jobs=1)
    b = run_suite("dominance", seed=2, jobs=3)
    assert verify_report_to_json(a) == verify_report_to_json(b)


def test_oracle_scale_bounds():
    with pytest.raises(TooLarge):
        run_suite("sn-oracle", scale=9)
    with pytest.raises(TooLarge):
        run_suite("main-theorem-f2", scale=5)
    rep = run_suite("an-oracle", scale=4)
    assert rep.passed and rep.scale == 4
