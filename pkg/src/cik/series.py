"""Truncated formal power series over the rationals.

This is the brute-force side of every cross-check in the package: the
functions G_j, f_j, g_j and the Musallam-Bustoz variant are expanded here
directly from their definitions, without any of the closed forms.

A :class:`TruncatedSeries` of order ``n`` knows the coefficients of
``v^0 .. v^(n-1)``; anything higher is unknown, not zero. Binary
operations truncate to the smaller order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable

__all__ = [
    "TruncatedSeries",
    "series_add",
    "series_mul",
    "series_scale",
    "series_shift",
    "series_invert",
    "series_derivative",
    "series_pow",
    "series_exp",
    "series_exp_scaled",
    "series_expm1_over_v",
    "series_F1",
    "oracle_G_series",
    "oracle_f_series",
    "oracle_gamma_series",
    "oracle_frak_g_series",
    "C_from_frak_g",
]


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[:order])

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[:n] == other.coeffs[:n]

    __hash__ = None  # equality is only up to the common order

    def __add__(self, other):
        return series_add(self, other)

    def __sub__(self, other):
        return series_add(self, series_scale(other, -1))

    def __neg__(self):
        return series_scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return series_scale(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return series_pow(self, n)

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries([{body}])"


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(a.coeffs[i] + b.coeffs[i] for i in range(n))


def series_scale(a: TruncatedSeries, c) -> TruncatedSeries:
    c = Fraction(c)
    return TruncatedSeries(c * x for x in a.coeffs)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    x, y = a.coeffs, b.coeffs
    out = []
    for m in range(n):
        s = Fraction(0)
        for i in range(m + 1):
            if x[i] and y[m - i]:
                s += x[i] * y[m - i]
        out.append(s)
    return TruncatedSeries(out)


def series_pow(a: TruncatedSeries, n: int) -> TruncatedSeries:
    if n < 0:
        return series_pow(series_invert(a), -n)
    out = TruncatedSeries([1] + [0] * (a.order - 1))
    base = a
    while n:
        if n & 1:
            out = series_mul(out, base)
        n >>= 1
        if n:
            base = series_mul(base, base)
    return out


def series_shift(a: TruncatedSeries, m: int) -> TruncatedSeries:
    """Multiply by v^m; for m < 0 divide, which needs the first |m| coefficients to vanish.

    The order moves with the shift: v^m * (series of order n) has order n + m.
    """
    if m >= 0:
        return TruncatedSeries((0,) * m + a.coeffs)
    m = -m
    if m > a.order:
        raise ValueError(f"cannot divide a series of order {a.order} by v^{m}")
    if any(a.coeffs[:m]):
        raise ValueError(f"cannot divide by v^{m}: leading coefficients are not all zero")
    return TruncatedSeries(a.coeffs[m:])


def series_invert(a: TruncatedSeries) -> TruncatedSeries:
    """Reciprocal 1/a via b_0 = 1/a_0, b_n = -(1/a_0) sum_{i=1}^n a_i b_{n-i}."""
    if a.order == 0:
        return a
    a0 = a.coeffs[0]
    if a0 == 0:
        raise ValueError("cannot invert a series with zero constant term")
    inv0 = 1 / a0
    b = [inv0]
    for n in range(1, a.order):
        s = Fraction(0)
        for i in range(1, n + 1):
            if a.coeffs[i]:
                s += a.coeffs[i] * b[n - i]
        b.append(-inv0 * s)
    return TruncatedSeries(b)


def series_derivative(a: TruncatedSeries, times: int = 1) -> TruncatedSeries:
    if times < 0 or times > a.order:
        raise ValueError(f"cannot differentiate a series of order {a.order} {times} times")
    return TruncatedSeries(
        a.coeffs[i + times] * (factorial(i + times) // factorial(i))
        for i in range(a.order - times)
    )


def series_exp_scaled(c, order: int) -> TruncatedSeries:
    """e^(c v) = sum c^i v^i / i!."""
    c = Fraction(c)
    return TruncatedSeries(c**i / factorial(i) for i in range(order))


def series_exp(order: int) -> TruncatedSeries:
    return series_exp_scaled(1, order)


def series_expm1_over_v(order: int) -> TruncatedSeries:
    """(e^v - 1)/v = sum v^i / (i+1)!."""
    return TruncatedSeries(Fraction(1, factorial(i + 1)) for i in range(order))


def series_F1(order: int) -> TruncatedSeries:
    """F_1(v) = (1 - e^-v)/v = sum (-1)^i v^i / (i+1)!."""
    return TruncatedSeries(Fraction((-1) ** i, factorial(i + 1)) for i in range(order))


def _check_j(j: int) -> None:
    if j < 1:
        raise ValueError(f"j must be a positive integer, got {j}")


def oracle_G_series(j: int, order: int) -> TruncatedSeries:
    """G_j(v) = v^j/(1-e^-v) = v^(j-1) / F_1(v)."""
    _check_j(j)
    return series_shift(series_invert(series_F1(order)), j - 1).truncate(order)


def oracle_f_series(j: int, order: int) -> TruncatedSeries:
    """f_j = G_j^(j)."""
    return series_derivative(oracle_G_series(j, order + j), j)


def oracle_gamma_series(j: int, order: int) -> TruncatedSeries:
    """g_j(v) = F_1(v)^(j+1) e^(j v) f_j(v); coefficient k is gamma(j, k)."""
    _check_j(j)
    return series_pow(series_F1(order), j + 1) * series_exp_scaled(j, order) * oracle_f_series(j, order)


def oracle_frak_g_series(j: int, order: int) -> TruncatedSeries:
    """(e^v - 1)^(j+1) f_j(v)."""
    _check_j(j)
    expm1 = series_shift(series_expm1_over_v(order), 1).truncate(order)
    return series_pow(expm1, j + 1) * oracle_f_series(j, order)


def C_from_frak_g(j: int, order: int) -> list[Fraction]:
    """C(j, k) for k < order, read off as k! [v^k] / (j+1)!."""
    s = oracle_frak_g_series(j, order)
    return [s.coeffs[k] * factorial(k) / factorial(j + 1) for k in range(order)]
