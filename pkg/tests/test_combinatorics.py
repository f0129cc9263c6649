from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cik.combinatorics import (
    MemoLimitError,
    MemoTables,
    bell_at_reciprocals,
    bell_partial,
    bell_scaling_check,
    bernoulli,
    bernoulli_stirling_sum,
    binomial,
    faa_di_bruno,
    falling_factorial,
    generalized_binomial,
    reciprocal_derivative_coeffs,
    rising_factorial,
    stirling2,
)
from cik.series import TruncatedSeries, series_exp, series_expm1_over_v, series_invert, series_pow, series_shift

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=20)


def test_factorial_values():
    from cik.combinatorics import factorial as fact

    assert (fact(0), fact(5), fact(9)) == (1, 120, 362880)


@pytest.mark.parametrize("n,k,want", [(4, 2, 6), (7, 0, 1), (0, 0, 1), (3, 5, 0), (5, -1, 0), (-3, 2, 6)])
def test_binomial(n, k, want):
    assert binomial(n, k) == want


def test_falling_and_rising():
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(Fraction(7, 3), 0) == 1
    assert falling_factorial(4, 5) == 0
    assert rising_factorial(1, 3) == 6
    assert rising_factorial(Fraction(7, 3), 0) == 1
    assert rising_factorial(Fraction(1, 2), 2) == Fraction(3, 4)
    with pytest.raises(ValueError):
        falling_factorial(3, -1)


def test_generalized_binomial_matches_integer_binomial():
    for n in range(10):
        for m in range(12):
            assert generalized_binomial(n, m) == binomial(n, m)
    assert generalized_binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert generalized_binomial(3, -1) == 0


def test_stirling_examples():
    assert stirling2(4, 2) == 7
    assert stirling2(3, 5) == 0
    assert all(stirling2(n, n) == 1 for n in range(40))
    assert stirling2(0, 0) == 1 and stirling2(5, 0) == 0


def test_stirling_recurrence_to_60():
    for n in range(1, 61):
        for k in range(1, n + 1):
            assert stirling2(n, k) == k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def test_stirling_matches_generating_function():
    # (e^v - 1)^k / k! = sum_n S(n, k) v^n / n!
    order = 31
    expm1 = series_shift(series_expm1_over_v(order), 1).truncate(order)
    for k in range(order):
        gf = series_pow(expm1, k)
        for n in range(order):
            assert gf[n] * factorial(n) / factorial(k) == stirling2(n, k), (n, k)


def test_bernoulli_examples():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(3) == 0
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_bernoulli_parity_and_sign():
    for k in range(1, 16):
        assert bernoulli(2 * k + 1) == 0
        assert (bernoulli(2 * k) > 0) == (k % 2 == 1)


def test_bernoulli_routes_agree_to_40():
    inv = series_invert(series_expm1_over_v(41))
    for n in range(41):
        assert bernoulli(n) == bernoulli_stirling_sum(n) == inv[n] * factorial(n)


def test_canonical_rationals():
    for n in range(30):
        b = bernoulli(n)
        assert b.denominator > 0
        assert Fraction(b.numerator, b.denominator) == b


def test_memo_limit():
    t = MemoTables(limit=10)
    assert t.stirling2(10, 3) == 9330
    with pytest.raises(MemoLimitError):
        t.stirling2(11, 3)
    with pytest.raises(MemoLimitError):
        t.bernoulli(11)


def test_memo_tables_are_append_only():
    t = MemoTables()
    row5 = [t.stirling2(5, k) for k in range(6)]
    t.warm(30)
    assert [t.stirling2(5, k) for k in range(6)] == row5


def test_bell_examples():
    assert bell_partial(0, 0, ()) == 1
    assert bell_partial(2, 1, (Fraction(1, 2), Fraction(1, 3))) == Fraction(1, 3)
    assert bell_partial(3, 5, ()) == 0
    assert bell_partial(4, 0, ()) == 0
    with pytest.raises(ValueError):
        bell_partial(5, 2, (1, 1))


def test_bell_at_ones_is_stirling():
    for n in range(15):
        for k in range(n + 1):
            assert bell_partial(n, k, [1] * (n + 1)) == stirling2(n, k)


def test_bell_reciprocals():
    assert bell_at_reciprocals(2, 1) == Fraction(1, 3)
    assert bell_at_reciprocals(0, 0) == 1
    assert bell_at_reciprocals(3, 3) == Fraction(1, 8)
    assert bell_at_reciprocals(2, 4) == 0
    for n in range(13):
        xs = [Fraction(1, i + 2) for i in range(n + 1)]
        for k in range(n + 1):
            assert bell_at_reciprocals(n, k) == bell_partial(n, k, xs)


def test_bell_scaling_examples():
    assert bell_scaling_check(3, 2, 2, 3, (1, 1))
    assert bell_scaling_check(4, 2, -1, 1, (1, 1, 1))
    assert bell_scaling_check(6, 3, 1, 1, (2, 5, 7, 11))


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_bell_scaling_random(data):
    n = data.draw(st.integers(0, 10))
    k = data.draw(st.integers(0, n))
    a, b = data.draw(rationals), data.draw(rationals)
    xs = data.draw(st.lists(rationals, min_size=n + 1, max_size=n + 1))
    assert bell_scaling_check(n, k, a, b, xs)


def test_faa_di_bruno_examples():
    assert faa_di_bruno([7], [], 0) == 7
    assert faa_di_bruno([0, 3], [5], 1) == 15
    # exp(v + v^2/2): second derivative at 0 is 2
    assert faa_di_bruno([1, 1, 1], [1, 1], 2) == 2
    with pytest.raises(ValueError):
        faa_di_bruno([1], [1], 1)


@settings(max_examples=30, deadline=None)
@given(st.lists(rationals, min_size=6, max_size=6))
def test_faa_di_bruno_against_series_composition(h):
    # d^n/dv^n exp(h(v)) at 0 with h(0) = 0, via exp of a series with zero constant term
    order = 6
    hs = TruncatedSeries([0] + [c / factorial(i + 1) for i, c in enumerate(h[: order - 1])])
    expo = series_exp(order)
    comp = TruncatedSeries([0] * order)
    power = TruncatedSeries([1] + [0] * (order - 1))
    for i in range(order):
        comp = comp + power * expo[i]
        power = power * hs
    for n in range(order):
        assert faa_di_bruno([1] * (n + 1), h[:n], n) == comp[n] * factorial(n)


def test_reciprocal_derivative_coeffs():
    assert reciprocal_derivative_coeffs(0) == [1]
    assert reciprocal_derivative_coeffs(1) == [1, -1]
    assert reciprocal_derivative_coeffs(2) == [1, -3, 2]
