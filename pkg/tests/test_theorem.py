import numpy as np

from verlinde import TheoremReport, verify_level, verify_range
from verlinde.theorem import Mismatch, compare_tensors, summarize


def test_small_levels():
    for k in (0, 1, 2):
        r = verify_level(k)
        assert r.verdict and r.m == k + 2 and r.rank_match and r.k1_vanishes and not r.mismatches


def test_verify_range_examples():
    assert [r.verdict for r in verify_range(0)] == [True]
    reports = verify_range(20)
    assert len(reports) == 21 and all(r.verdict for r in reports)
    assert [r.k for r in reports] == list(range(21))


def test_parallel_run_keeps_order():
    reports = verify_range(8, workers=2)
    assert [r.k for r in reports] == list(range(9)) and all(r.verdict for r in reports)


def test_mismatch_detection():
    a = np.zeros((2, 2, 2), dtype=int)
    b = a.copy()
    b[1, 1, 0] = 1
    assert compare_tensors(a, b) == (Mismatch(1, 1, 0, 0, 1),)
    bad = TheoremReport(1, 3, True, True, (Mismatch(1, 1, 0, 0, 1),))
    assert not bad.verdict
    assert "FAIL" in bad.summary_line() and "N[1,1,0]" in bad.summary_line()
    assert not TheoremReport(1, 3, False, True).verdict
    assert not TheoremReport(1, 3, True, False).verdict


def test_summary_and_json():
    reports = verify_range(2)
    text = summarize(reports)
    assert text.splitlines()[-1] == "3/3 levels verified"
    assert reports[2].to_json() == {
        "k": 2, "m": 4, "rank_match": True, "k1_vanishes": True, "mismatches": [], "verdict": True
    }
