import math

import pytest

import lmsf


def test_expand_laguerre_two():
    f = lmsf.expand("laguerre", "2", "schur")
    assert f["basis"] == "S"
    assert [t["index"] for t in f["terms"]] == [[], [1], [2]]


def test_expand_meixner_in_fs():
    f = lmsf.expand("meixner", "1")
    assert f["basis"] == "FS"
    assert len(f["terms"]) == 2


def test_bad_shape():
    with pytest.raises(ValueError):
        lmsf.expand("laguerre", "1,2")


def test_suites_and_verify():
    names = {s["name"] for s in lmsf.suites()}
    assert "psi" in names
    report = lmsf.verify("psi", 4)
    assert report["passed"] is True
    assert report["first_counterexample"] is None


def test_pmf_and_sum():
    assert lmsf.zm_pmf("")["pmf"] == pytest.approx(0.25)
    assert lmsf.zm_pmf("2")["pmf"] == pytest.approx(0.15625)
    s = lmsf.zm_sum(40)
    assert s["deficit"] < 1e-9
    assert s["mean_size"] == pytest.approx(s["mean_size_exact"], rel=1e-8)


def test_inadmissible_parameters():
    with pytest.raises(lmsf.DomainError):
        lmsf.zm_pmf("1", z="1/3", zp="4/3")


def test_simulate_is_reproducible():
    a = lmsf.simulate("", 5.0, seed=17)
    b = lmsf.simulate("", 5.0, seed=17)
    assert a == b
    times = [e["time"] for e in a["events"]]
    assert times == sorted(times)


def test_transition_relaxes_to_pmf():
    r = lmsf.transition("", "", t=10.0)
    assert r["value"] == pytest.approx(r["pmf_to"], abs=1e-4)


def test_scaling_first_moment():
    s = lmsf.scaling("1/2", "p", "1", samples=5000, seed=3)
    assert s["exact_prelimit"] == pytest.approx(1.0)
    assert math.isfinite(s["estimate"])
