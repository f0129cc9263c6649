"""Exact combinatorial primitives.

Everything here works on Python integers and :class:`fractions.Fraction`,
so results are exact and always in lowest terms. Stirling numbers of the
second kind and Bernoulli numbers are kept in process-wide memo tables
that grow on demand and are never evicted.

Bernoulli numbers use the ``v/(e^v - 1)`` convention, so ``B_1 = -1/2``.
"""

from __future__ import annotations

import os
import threading
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

__all__ = [
    "MemoLimitError",
    "RouteDisagreement",
    "MemoTables",
    "TABLES",
    "factorial",
    "binomial",
    "falling_factorial",
    "rising_factorial",
    "generalized_binomial",
    "stirling2",
    "bernoulli",
    "bernoulli_stirling_sum",
    "bell_partial",
    "bell_scaling_check",
    "bell_at_reciprocals",
    "faa_di_bruno",
    "reciprocal_derivative_coeffs",
]


class MemoLimitError(ValueError):
    """Raised when a memo index exceeds the ``CIK_MEMO_LIMIT`` cap."""


class RouteDisagreement(ArithmeticError):
    """Two independent formulas for the same quantity gave different values.

    This always indicates an implementation bug, never a user error.
    """

    def __init__(self, quantity, index, route_a, value_a, route_b, value_b):
        self.quantity = quantity
        self.index = index
        self.routes = (route_a, route_b)
        self.values = (value_a, value_b)
        super().__init__(
            f"{quantity}{index}: route {route_a!r} gave {value_a}, "
            f"route {route_b!r} gave {value_b}"
        )


def _memo_limit_from_env() -> int | None:
    raw = os.environ.get("CIK_MEMO_LIMIT", "").strip()
    if not raw:
        return None
    limit = int(raw)
    if limit < 0:
        raise ValueError(f"CIK_MEMO_LIMIT must be non-negative, got {raw!r}")
    return limit


class MemoTables:
    """Append-only caches for Stirling and Bernoulli numbers.

    Reads of already-computed entries take no lock; growth happens inside a
    critical section, so the tables are safe to share between threads.
    Factorials are not cached here because :func:`math.factorial` is already
    fast enough at the sizes involved.
    """

    def __init__(self, limit: int | None = None):
        self.limit = limit
        self._lock = threading.RLock()
        # _stirling[n][k] = S(n, k) for 0 <= k <= n
        self._stirling: list[list[int]] = [[1]]
        self._bernoulli: list[Fraction] = [Fraction(1)]

    def _check(self, n: int) -> None:
        if self.limit is not None and n > self.limit:
            raise MemoLimitError(f"index {n} exceeds memo limit {self.limit}")

    def stirling2(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise ValueError(f"stirling2 needs n, k >= 0, got ({n}, {k})")
        if k > n:
            return 0
        rows = self._stirling
        if n >= len(rows):
            self._check(n)
            with self._lock:
                while len(rows) <= n:
                    prev = rows[-1]
                    m = len(rows)
                    row = [0] * (m + 1)
                    row[m] = 1
                    for i in range(1, m):
                        row[i] = i * prev[i] + prev[i - 1]
                    rows.append(row)
        return rows[n][k]

    def bernoulli(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"bernoulli needs n >= 0, got {n}")
        table = self._bernoulli
        if n >= len(table):
            self._check(n)
            with self._lock:
                if n >= len(table):
                    self._extend_bernoulli(max(n, 2 * len(table)))
        return table[n]

    def _extend_bernoulli(self, upto: int) -> None:
        # Series route: B_i = i! [v^i] v/(e^v - 1).
        from .series import series_expm1_over_v, series_invert

        inv = series_invert(series_expm1_over_v(upto + 1))
        start = len(self._bernoulli)
        fresh = []
        for i in range(start, upto + 1):
            by_series = inv.coeffs[i] * factorial(i)
            by_stirling = bernoulli_stirling_sum(i, self)
            if by_series != by_stirling:
                raise RouteDisagreement(
                    "B", (i,), "series_inversion", by_series, "stirling_sum", by_stirling
                )
            fresh.append(by_series)
        self._bernoulli.extend(fresh)

    def warm(self, n: int) -> None:
        """Precompute Stirling rows up to ``2n`` and Bernoulli numbers up to ``n``."""
        self.stirling2(2 * n, 0)
        self.bernoulli(n)


TABLES = MemoTables(limit=_memo_limit_from_env())


def binomial(n: int, k: int) -> int:
    """C(n, k), with 0 for k < 0 or k > n >= 0."""
    if k < 0 or (n >= 0 and k > n):
        return 0
    if n < 0:
        # (-1)^k C(k - n - 1, k)
        return (-1) ** k * comb(k - n - 1, k)
    return comb(n, k)


def falling_factorial(x, j: int):
    """x (x-1) ... (x-j+1); the empty product for j = 0 is 1."""
    if j < 0:
        raise ValueError(f"falling_factorial needs j >= 0, got {j}")
    out = 1
    for i in range(j):
        out *= x - i
    return out


def rising_factorial(x, j: int):
    """x (x+1) ... (x+j-1); the empty product for j = 0 is 1."""
    if j < 0:
        raise ValueError(f"rising_factorial needs j >= 0, got {j}")
    out = 1
    for i in range(j):
        out *= x + i
    return out


def generalized_binomial(theta, m: int) -> Fraction:
    """C(theta, m) = <theta>_m / m! for rational theta and integer m >= 0 (0 if m < 0)."""
    if m < 0:
        return Fraction(0)
    return Fraction(falling_factorial(Fraction(theta), m)) / factorial(m)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    return TABLES.stirling2(n, k)


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2.

    Each new entry is produced by inverting the series (e^v - 1)/v and
    checked against :func:`bernoulli_stirling_sum`; a mismatch raises
    :class:`RouteDisagreement`.
    """
    return TABLES.bernoulli(n)


def bernoulli_stirling_sum(n: int, tables: MemoTables | None = None) -> Fraction:
    """B_n = sum_i (-1)^i C(n+1, i+1) / C(n+i, i) * S(n+i, i)."""
    tables = tables or TABLES
    total = Fraction(0)
    for i in range(n + 1):
        s = tables.stirling2(n + i, i)
        if s:
            total += Fraction((-1) ** i * comb(n + 1, i + 1) * s, comb(n + i, i))
    return total


def _partitions(n: int, k: int, largest: int):
    """Multiplicity vectors {part: count} with parts <= largest, sum n, k parts."""
    if n == 0 and k == 0:
        yield {}
        return
    if k == 0 or n < k or largest == 0:
        return
    # part `largest` used c times; remaining parts are all < largest
    for c in range(min(n // largest, k), -1, -1):
        rest_n = n - c * largest
        rest_k = k - c
        # prune: the remaining k' parts need at least k' and at most k'*(largest-1)
        if rest_n < rest_k or rest_n > rest_k * (largest - 1):
            continue
        for sub in _partitions(rest_n, rest_k, largest - 1):
            if c:
                sub = dict(sub)
                sub[largest] = c
            yield sub


def bell_partial(n: int, k: int, xs: Sequence) -> Fraction:
    """Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}).

    Summed directly over the integer partitions of ``n`` into ``k`` parts.
    B_{0,0} = 1, and B_{n,k} = 0 whenever k > n or (k = 0 < n).
    """
    if n < 0 or k < 0:
        raise ValueError(f"bell_partial needs n, k >= 0, got ({n}, {k})")
    if k > n:
        return Fraction(0)
    if k == 0:
        return Fraction(1 if n == 0 else 0)
    width = n - k + 1
    if len(xs) < width:
        raise ValueError(f"bell_partial({n}, {k}) needs {width} arguments, got {len(xs)}")
    total = Fraction(0)
    for mult in _partitions(n, k, width):
        term = Fraction(factorial(n))
        for part, count in mult.items():
            term *= (Fraction(xs[part - 1]) / factorial(part)) ** count / factorial(count)
        total += term
    return total


def bell_scaling_check(n: int, k: int, a, b, xs: Sequence) -> bool:
    """Check B_{n,k}(a b x_1, a b^2 x_2, ...) == a^k b^n B_{n,k}(x_1, x_2, ...)."""
    a, b = Fraction(a), Fraction(b)
    width = n - k + 1 if k else 0
    xs = [Fraction(x) for x in xs[:width]]
    scaled = [a * b ** (i + 1) * x for i, x in enumerate(xs)]
    return bell_partial(n, k, scaled) == a**k * b**n * bell_partial(n, k, xs)


def bell_at_reciprocals(n: int, k: int) -> Fraction:
    """B_{n,k}(1/2, 1/3, ..., 1/(n-k+2)) from the alternating Stirling sum."""
    if n < 0 or k < 0:
        raise ValueError(f"bell_at_reciprocals needs n, k >= 0, got ({n}, {k})")
    if k > n:
        return Fraction(0)
    total = sum(
        (-1) ** (k - l) * comb(n + k, k - l) * stirling2(n + l, l) for l in range(k + 1)
    )
    return Fraction(factorial(n) * total, factorial(n + k))


def faa_di_bruno(outer_derivs: Sequence, inner_derivs: Sequence, n: int) -> Fraction:
    """n-th derivative of f(h(v)) at a point.

    ``outer_derivs[k]`` is f^(k)(h(v0)) for k = 0..n and ``inner_derivs[i]``
    is h^(i+1)(v0) for i = 0..n-1.
    """
    if len(outer_derivs) < n + 1:
        raise ValueError(f"need {n + 1} outer derivatives, got {len(outer_derivs)}")
    if len(inner_derivs) < n:
        raise ValueError(f"need {n} inner derivatives, got {len(inner_derivs)}")
    if n == 0:
        return Fraction(outer_derivs[0])
    return sum(
        (Fraction(outer_derivs[k]) * bell_partial(n, k, inner_derivs) for k in range(1, n + 1)),
        Fraction(0),
    )


def reciprocal_derivative_coeffs(n: int) -> list[int]:
    """Coefficients c_l of d^n/dv^n 1/(1-e^-v) = sum_l c_l (1/(1-e^-v))^(l+1)."""
    if n < 0:
        raise ValueError(f"reciprocal_derivative_coeffs needs n >= 0, got {n}")
    return [(-1) ** l * factorial(l) * stirling2(n + 1, l + 1) for l in range(n + 1)]
