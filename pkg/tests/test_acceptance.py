"""Acceptance criteria 1-11, one test each.

Runtime limits are measured in a fresh interpreter so that memo tables
warmed by other tests do not flatter the timings.
"""

import math
import random
import subprocess
import sys
import time
from fractions import Fraction
from math import factorial

import mpmath
import numpy as np

from cik.clark_ismail import (
    G_ROUTES,
    TABLE_ROUTES,
    G_eval_numeric,
    EvalPoint,
    f_derivative_at_zero,
    f_eval_grid,
    log_convexity_report,
)
from cik.combinatorics import bernoulli, rising_factorial
from cik.golden import golden_table
from cik.hessenberg import bernoulli_hessenberg_det, rising_factorial_hessenberg_det, wronski_inverse_coeff
from cik.series import TruncatedSeries, series_invert


def cold_seconds(code: str) -> float:
    """Wall time of ``code`` in a new interpreter, excluding interpreter start-up and imports."""
    prog = (
        "import time, cik.clark_ismail, cik.hessenberg\n"
        "t = time.perf_counter()\n" + code + "\nprint(time.perf_counter() - t)\n"
    )
    res = subprocess.run([sys.executable, "-c", prog], capture_output=True, text=True, check=True)
    return float(res.stdout.split()[-1])


def table_cells(quantity, routes, js, ks):
    ref = golden_table(quantity)
    bad = []
    for j in js:
        for k in ks:
            for name, fn in routes.items():
                if fn(j, k) != ref[j, k]:
                    bad.append((name, j, k))
    return bad


TABLE_CODE = """
from cik.clark_ismail import G_ROUTES, TABLE_ROUTES
for j in range({j0}, {j1}):
    for k in range({k0}, {k1}):
        for fn in {routes}.values():
            fn(j, k)
"""


def test_criterion_01_table1(criterion):
    secs = cold_seconds(TABLE_CODE.format(j0=1, j1=10, k0=0, k1=10, routes="G_ROUTES"))
    criterion("1 Table 1 (G) by six routes", f"{secs:.2f}s")
    assert len(G_ROUTES) == 6
    assert table_cells("G", G_ROUTES, range(1, 10), range(10)) == []
    assert len(golden_table("G")) == 90
    assert secs < 5


def test_criterion_02_table2(criterion):
    secs = cold_seconds(TABLE_CODE.format(j0=1, j1=10, k0=0, k1=8, routes="TABLE_ROUTES['gamma']"))
    criterion("2 Table 2 (gamma) by two routes and series", f"{secs:.2f}s")
    assert table_cells("gamma", TABLE_ROUTES["gamma"], range(1, 10), range(8)) == []
    assert len(golden_table("gamma")) == 72
    assert secs < 10


def test_criterion_03_table3(criterion):
    secs = cold_seconds(TABLE_CODE.format(j0=1, j1=9, k0=0, k1=10, routes="TABLE_ROUTES['C']"))
    criterion("3 Table 3 (C) by two routes and series", f"{secs:.2f}s")
    assert table_cells("C", TABLE_ROUTES["C"], range(1, 9), range(10)) == []
    assert len(golden_table("C")) == 80
    assert secs < 10


def test_criterion_04_hessenberg_bernoulli(criterion):
    secs = cold_seconds("from cik.hessenberg import bernoulli_hessenberg_det\nfor j in range(31): bernoulli_hessenberg_det(j)")
    criterion("4 Hessenberg determinant = Bernoulli, j <= 30", f"{secs:.2f}s")
    for j in range(31):
        assert bernoulli_hessenberg_det(j) == (-1) ** (j + 1) * bernoulli(j + 1) / factorial(j + 1)
    assert secs < 5


def test_criterion_05_wronski(criterion):
    criterion("5 Wronski determinant = series inversion, 100 random series")
    rng = random.Random(5)
    for _ in range(100):
        a = [Fraction(rng.randint(-99, 99), rng.randint(1, 99)) for _ in range(12)]
        inv = series_invert(TruncatedSeries([1] + a))
        for j in range(1, 13):
            assert wronski_inverse_coeff(a, j) == inv[j]


def test_criterion_06_rising_factorial(criterion):
    criterion("6 rising-factorial determinant, 20 random theta")
    rng = random.Random(6)
    for _ in range(20):
        theta = Fraction(rng.randint(-99, 99), rng.randint(1, 99))
        for j in range(1, 11):
            assert rising_factorial_hessenberg_det(theta, j) == rising_factorial(theta, j) / factorial(j)


def test_criterion_07_initial_values(criterion):
    criterion("7 f_j(0), f_j'(0) and vanishing even derivatives")
    for j in range(1, 21):
        assert f_derivative_at_zero(j, 0) == Fraction(factorial(j), 2)
        assert f_derivative_at_zero(j, 1) == Fraction(factorial(j + 1), 12)
        for k in range(1, 11):
            assert f_derivative_at_zero(j, 2 * k) == 0


def test_criterion_08_log_convexity(criterion):
    criterion("8 log-convexity and the j >= 6 threshold")
    for j in range(1, 21):
        r = log_convexity_report(j, 15)
        assert r.interior_ok, j
        assert r.extended_ok == (j >= 6), j


def test_criterion_09_positivity(criterion):
    vs = np.arange(1, 2001) / 100.0
    vs = vs[vs > math.log(2)]
    lowest = min(float(f_eval_grid(j, vs).min()) for j in range(2, 17))
    criterion("9 f_j(v) > 0 on (ln 2, 20], 2 <= j <= 16", f"min {lowest:.4g} over {vs.size} points per j")
    assert vs[0] == 0.7 and vs[-1] == 20.0
    assert lowest > 0


def _stencil(f, v, k, h):
    if k == 0:
        return f(v)
    p1, m1, p2, m2 = f(v + h), f(v - h), f(v + 2 * h), f(v - 2 * h)
    if k == 1:
        return (-p2 + 8 * p1 - 8 * m1 + m2) / (12 * h)
    if k == 2:
        return (-p2 + 16 * p1 - 30 * f(v) + 16 * m1 - m2) / (12 * h**2)
    if k == 3:
        return (p2 - 2 * p1 + 2 * m1 - m2) / (2 * h**3)
    return (p2 - 4 * p1 + 6 * f(v) - 4 * m1 + m2) / h**4


def test_criterion_10_finite_differences(criterion):
    worst = 0.0
    with mpmath.workdps(40):
        h = mpmath.mpf("1e-6")
        for j in range(1, 5):
            g = lambda t, j=j: t**j / (1 - mpmath.exp(-t))
            for k in range(5):
                for v in ("0.1", "0.5", "1", "2"):
                    fd = _stencil(g, mpmath.mpf(v), k, h)
                    got = G_eval_numeric(EvalPoint(float(v), j, k))
                    worst = max(worst, float(abs(got - fd) / abs(fd)))
    criterion("10 numeric G vs 5-point central differences", f"worst relative {worst:.1e}")
    assert worst < 1e-5


def test_criterion_11_scan(criterion, tmp_path):
    outputs = {}
    t = time.perf_counter()
    for kind in ("gamma", "C"):
        for run in (1, 2):
            path = tmp_path / f"{kind}{run}.csv"
            subprocess.run(
                [sys.executable, "-m", "cik", "scan", kind, "--jmax", "20", "--kmax", "20", "--out", str(path)],
                check=True,
                capture_output=True,
            )
            outputs[kind, run] = path.read_bytes()
    secs = (time.perf_counter() - t) / 2
    summaries = {kind: outputs[kind, 1].decode().splitlines()[-1] for kind in ("gamma", "C")}
    criterion("11 negativity scan j, k <= 20", f"{secs:.2f}s; gamma: {summaries['gamma']}; C: {summaries['C']}")
    for kind in ("gamma", "C"):
        assert outputs[kind, 1] == outputs[kind, 2]
    for kind, jmax, kmax in (("gamma", 9, 7), ("C", 8, 9)):
        rows = outputs[kind, 1].decode().splitlines()[1:-1]
        inside = [r for r in rows if int(r.split(",")[1]) <= jmax and int(r.split(",")[2]) <= kmax]
        assert inside == []
    assert secs < 60
