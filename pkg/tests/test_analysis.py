from fractions import Fraction

import pytest

from cik.clark_ismail import log_convexity_report, scan_nonnegativity


def test_extended_step_threshold():
    for j in range(1, 21):
        assert log_convexity_report(j, 3).extended_ok == (j * j - 5 * j - 4 >= 0)
    r = log_convexity_report(1, 2)
    assert (r.extended_lhs, r.extended_rhs) == (Fraction(1, 36), Fraction(1, 60))


def test_interior_log_convexity():
    r = log_convexity_report(3, 10)
    assert r.interior_ok and len(r.interior) == 9
    lines = r.lines()
    assert all(" pass " in line for line in lines[:-1])
    assert "extended first step: fail" in lines[-1]
    assert "extended first step: pass" in log_convexity_report(6, 2).lines()[-1]


def test_report_validation():
    with pytest.raises(ValueError):
        log_convexity_report(1, 1)


def test_scan_tabulated_ranges():
    g = scan_nonnegativity("gamma", 9, 7)
    c = scan_nonnegativity("C", 8, 9)
    assert g.negatives == [] and g.cells == 72
    assert c.negatives == [] and c.cells == 80
    assert g.summary == "scanned 72 cells, 0 negative"


def test_scan_parallel_is_identical():
    assert scan_nonnegativity("gamma", 12, 12, jobs=4).negatives == scan_nonnegativity("gamma", 12, 12).negatives


def test_scan_large_report_shape():
    r = scan_nonnegativity("gamma", 40, 40)
    assert r.cells == 40 * 41
    assert all(v < 0 for _, _, v in r.negatives)
    assert r.negatives == sorted(r.negatives, key=lambda t: (t[0], t[1]))


def test_scan_validation():
    with pytest.raises(ValueError):
        scan_nonnegativity("G", 3, 3)
    with pytest.raises(ValueError):
        scan_nonnegativity("C", 0, 3)
