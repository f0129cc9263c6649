"""Exact values of G_j^(k)(0), f_j, gamma(j, k) and C(j, k), each by several formulas.

Notation: G_j(v) = v^j / (1 - e^-v), f_j = G_j^(j),
g_j = F_1^(j+1) e^(jv) f_j with coefficients gamma(j, k), and
(e^v - 1)^(j+1) f_j = (j+1)! sum_k C(j, k) v^k / k!.

Every quantity has at least two independent routes. The ``*_coeff`` and
``G_value`` entry points evaluate the routes side by side and raise
:class:`~cik.combinatorics.RouteDisagreement` if they differ.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterable

from ..combinatorics import (
    RouteDisagreement,
    bernoulli,
    falling_factorial,
    stirling2,
)
from ..hessenberg import ratio_derivative_via_determinant
from ..series import (
    C_from_frak_g,
    TruncatedSeries,
    oracle_G_series,
    oracle_gamma_series,
    series_pow,
)

__all__ = [
    "F1_derivative_at_zero",
    "G_value_stirling",
    "G_value_closed_form",
    "G_value_bernoulli",
    "G_value_determinantal",
    "G_value_recursive",
    "G_value_series",
    "G_value",
    "G_ROUTES",
    "closed_form_coefficients",
    "closed_form_leading_sum",
    "f_maclaurin_coeff",
    "f_maclaurin_coeff_stirling",
    "f_maclaurin_coeff_bernoulli",
    "f_derivative_at_zero",
    "gamma_coeff",
    "gamma_coeff_stirling",
    "gamma_coeff_bernoulli",
    "gamma_coeff_series",
    "frak_C_coeff",
    "frak_C_coeff_stirling",
    "frak_C_coeff_bernoulli",
    "frak_C_coeff_series",
    "CoefficientTable",
    "TABLE_ROUTES",
    "build_table",
]


def _check(j: int, k: int) -> None:
    if j < 1:
        raise ValueError(f"j must be a positive integer, got {j}")
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")


def F1_derivative_at_zero(k: int) -> Fraction:
    """F_1^(k)(0) = (-1)^k / (k+1)."""
    return Fraction((-1) ** k, k + 1)


@lru_cache(maxsize=None)
def _stirling_sum(n: int) -> Fraction:
    """sum_{q=0}^{n} (-1)^q/(q+1) S(n+q, q) / ((n-q)! (n+q)!)."""
    total = Fraction(0)
    for q in range(n + 1):
        s = stirling2(n + q, q)
        if s:
            total += Fraction((-1) ** q * s, (q + 1) * factorial(n - q) * factorial(n + q))
    return total


# -- G_j^(k)(0) --------------------------------------------------------------


def G_value_stirling(j: int, k: int) -> Fraction:
    """Alternating Stirling-number sum."""
    _check(j, k)
    if k < j - 1:
        return Fraction(0)
    n = k - j + 1
    return (-1) ** n * factorial(k) * factorial(n + 1) * _stirling_sum(n)


@lru_cache(maxsize=None)
def closed_form_coefficients(j: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Integer table a[q][m] such that

        G_j^(k)(v) = v^(j-k-1) sum_q sum_m a[q][m] u^(m+1) v^q,   u = v/(1-e^-v),

    with a[q][m] = (-1)^m C(k, q+m) <j>_(k-q-m) m! S(q+m+1, m+1).
    """
    _check(j, k)
    return tuple(
        tuple(
            (-1) ** m
            * comb(k, q + m)
            * falling_factorial(j, k - q - m)
            * factorial(m)
            * stirling2(q + m + 1, m + 1)
            for m in range(k - q + 1)
        )
        for q in range(k + 1)
    )


def _u_series(order: int) -> TruncatedSeries:
    # v/(1-e^-v) = sum (-1)^i B_i v^i / i!
    return TruncatedSeries(Fraction((-1) ** i) * bernoulli(i) / factorial(i) for i in range(order))


def G_value_closed_form(j: int, k: int) -> Fraction:
    """Limit v -> 0 of the closed form in powers of u = v/(1-e^-v).

    The row q of the closed form carries v^(j-k-1+q). Rows with a positive
    power vanish at 0; every other row contributes the coefficient of
    v^(k-j+1-q) in its polynomial in u, read off exactly from the series of u.
    """
    _check(j, k)
    if k < j - 1:
        return Fraction(0)
    a = closed_form_coefficients(j, k)
    top = k - j + 1  # largest power of v needed from any u-polynomial
    u = _u_series(top + 1)
    powers = [None] + [series_pow(u, p) for p in range(1, k + 2)]
    total = Fraction(0)
    for q in range(top + 1):
        need = top - q
        total += sum(c * powers[m + 1].coeffs[need] for m, c in enumerate(a[q]) if c)
    return total


def closed_form_leading_sum(j: int, k: int) -> Fraction:
    """Only the q = k-j+1 row of the closed form, with u replaced by 1.

    This is the at-zero value obtained by discarding the rows that carry
    negative powers of v. It agrees with G_j^(k)(0) for k <= 2j - 2 and
    differs beyond that (already at j = 1, k = 1 it gives 1 instead of 1/2).
    """
    _check(j, k)
    if k < j - 1:
        return Fraction(0)
    return Fraction(sum(closed_form_coefficients(j, k)[k - j + 1]))


def G_value_bernoulli(j: int, k: int) -> Fraction:
    """k! (-1)^(k-j+1) B_(k-j+1) / (k-j+1)!."""
    _check(j, k)
    if k < j - 1:
        return Fraction(0)
    n = k - j + 1
    return (-1) ** n * bernoulli(n) * factorial(k) / factorial(n)


def G_value_determinantal(j: int, k: int) -> Fraction:
    """Ratio-derivative determinant for v^(j-1) / F_1(v) at v = 0."""
    _check(j, k)
    g = [factorial(j - 1) if i == j - 1 else 0 for i in range(k + 1)]
    h = [F1_derivative_at_zero(i) for i in range(k + 1)]
    return ratio_derivative_via_determinant(g, h, k)


@lru_cache(maxsize=None)
def _recursive_prefix(j: int, k: int) -> tuple[Fraction, ...]:
    if k < 0:
        return ()
    prev = _recursive_prefix(j, k - 1)
    # <j-1>_k v^(j-k-1) at 0: (j-1)! when k = j-1; otherwise either a positive
    # power of v or a falling factorial with a zero factor
    head = Fraction(factorial(j - 1) if k == j - 1 else 0)
    tail = sum(
        (comb(k, r) * F1_derivative_at_zero(k - r) * prev[r] for r in range(k)),
        Fraction(0),
    )
    return prev + ((head - tail) / F1_derivative_at_zero(0),)


def G_value_recursive(j: int, k: int) -> Fraction:
    """Recursion in k driven by the derivatives of F_1 at 0."""
    _check(j, k)
    return _recursive_prefix(j, k)[k]


@lru_cache(maxsize=None)
def _G_series(j: int, order: int) -> TruncatedSeries:
    return oracle_G_series(j, order)


def G_value_series(j: int, k: int) -> Fraction:
    """k! [v^k] of the series v^(j-1) / F_1(v)."""
    _check(j, k)
    return _G_series(j, k + 1).coeffs[k] * factorial(k)


G_ROUTES: dict[str, Callable[[int, int], Fraction]] = {
    "stirling_sum": G_value_stirling,
    "closed_form": G_value_closed_form,
    "bernoulli_form": G_value_bernoulli,
    "determinantal": G_value_determinantal,
    "recursion": G_value_recursive,
    "series_oracle": G_value_series,
}


def _agree(quantity: str, index: tuple, values: Iterable[tuple[str, Fraction]]) -> Fraction:
    values = list(values)
    ref_route, ref = values[0]
    for route, val in values[1:]:
        if val != ref:
            raise RouteDisagreement(quantity, index, ref_route, ref, route, val)
    return ref


def G_value(j: int, k: int) -> Fraction:
    """G_j^(k)(0), cross-checked across all six routes."""
    return _agree("G", (j, k), ((name, fn(j, k)) for name, fn in G_ROUTES.items()))


# -- f_j ---------------------------------------------------------------------


def f_maclaurin_coeff_stirling(j: int, i: int) -> Fraction:
    _check(j, i)
    return (-1) ** (i + 1) * (i + 1) * (i + 2) * factorial(j + i) * _stirling_sum(i + 1)


def f_maclaurin_coeff_bernoulli(j: int, i: int) -> Fraction:
    """j! C(j+i, j) (-1)^(i+1) B_(i+1) / (i+1)!; zero for even i > 0."""
    _check(j, i)
    return (-1) ** (i + 1) * factorial(j) * comb(j + i, j) * bernoulli(i + 1) / factorial(i + 1)


def f_maclaurin_coeff(j: int, i: int) -> Fraction:
    """Coefficient of v^i in f_j(v), by the Stirling and Bernoulli forms."""
    return _agree(
        "f_coeff",
        (j, i),
        [
            ("stirling_sum", f_maclaurin_coeff_stirling(j, i)),
            ("bernoulli_form", f_maclaurin_coeff_bernoulli(j, i)),
        ],
    )


def f_derivative_at_zero(j: int, m: int) -> Fraction:
    """f_j^(m)(0): j!/2 at m = 0, (m+j)! B_(m+1)/(m+1)! for odd m, 0 for even m > 0."""
    _check(j, m)
    if m == 0:
        return Fraction(factorial(j), 2)
    if m % 2 == 0:
        return Fraction(0)
    return factorial(m + j) * bernoulli(m + 1) / factorial(m + 1)


# -- gamma(j, k) ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _bell_recip_block(m: int, p: int) -> Fraction:
    """sum_q (-1)^q C(m+p, p-q) S(m+q, q) / (m+p)!."""
    s = sum((-1) ** q * comb(m + p, p - q) * stirling2(m + q, q) for q in range(p + 1))
    return Fraction(s, factorial(m + p))


@lru_cache(maxsize=None)
def _exp_F1_coeff(j: int, n: int) -> Fraction:
    """[v^n] of e^(jv) F_1(v)^(j+1), assembled from Faa di Bruno with Bell values at 1/2, 1/3, ..."""
    total = Fraction(0)
    for m in range(n + 1):
        inner = sum(
            ((-1) ** p * falling_factorial(j + 1, p) * _bell_recip_block(m, p) for p in range(m + 1)),
            Fraction(0),
        )
        total += (-1) ** m * Fraction(j ** (n - m), factorial(n - m)) * inner
    return total


def gamma_coeff_stirling(j: int, k: int) -> Fraction:
    _check(j, k)
    return sum(
        (f_maclaurin_coeff_stirling(j, r) * _exp_F1_coeff(j, k - r) for r in range(k + 1)),
        Fraction(0),
    )


def gamma_coeff_bernoulli(j: int, k: int) -> Fraction:
    _check(j, k)
    return sum(
        (f_maclaurin_coeff_bernoulli(j, r) * _exp_F1_coeff(j, k - r) for r in range(k + 1)),
        Fraction(0),
    )


@lru_cache(maxsize=None)
def _gamma_series(j: int, order: int) -> TruncatedSeries:
    return oracle_gamma_series(j, order)


def gamma_coeff_series(j: int, k: int) -> Fraction:
    _check(j, k)
    return _gamma_series(j, k + 1).coeffs[k]


def gamma_coeff(j: int, k: int) -> Fraction:
    """gamma(j, k), by the triple Stirling sum and the Bernoulli form."""
    return _agree(
        "gamma",
        (j, k),
        [
            ("stirling_sum", gamma_coeff_stirling(j, k)),
            ("bernoulli_form", gamma_coeff_bernoulli(j, k)),
        ],
    )


# -- C(j, k) -------------------------------------------------------------------


def _frak_C(j: int, k: int, fcoeff) -> Fraction:
    total = Fraction(0)
    for r in range(k + 1):
        s = stirling2(k - r, j + 1)
        if s:
            total += fcoeff(j, r) * Fraction(s, factorial(k - r))
    return factorial(k) * total


def frak_C_coeff_stirling(j: int, k: int) -> Fraction:
    _check(j, k)
    return _frak_C(j, k, f_maclaurin_coeff_stirling)


def frak_C_coeff_bernoulli(j: int, k: int) -> Fraction:
    _check(j, k)
    return _frak_C(j, k, f_maclaurin_coeff_bernoulli)


@lru_cache(maxsize=None)
def _C_series(j: int, order: int) -> tuple[Fraction, ...]:
    return tuple(C_from_frak_g(j, order))


def frak_C_coeff_series(j: int, k: int) -> Fraction:
    _check(j, k)
    return _C_series(j, k + 1)[k]


def frak_C_coeff(j: int, k: int) -> Fraction:
    """C(j, k), by the Stirling and Bernoulli forms."""
    return _agree(
        "C",
        (j, k),
        [
            ("stirling_sum", frak_C_coeff_stirling(j, k)),
            ("bernoulli_form", frak_C_coeff_bernoulli(j, k)),
        ],
    )


# -- tables --------------------------------------------------------------------

TABLE_ROUTES: dict[str, dict[str, Callable[[int, int], Fraction]]] = {
    "G": dict(G_ROUTES),
    "gamma": {
        "stirling_sum": gamma_coeff_stirling,
        "bernoulli_form": gamma_coeff_bernoulli,
        "series_oracle": gamma_coeff_series,
    },
    "C": {
        "stirling_sum": frak_C_coeff_stirling,
        "bernoulli_form": frak_C_coeff_bernoulli,
        "series_oracle": frak_C_coeff_series,
    },
}


@dataclass
class CoefficientTable:
    """(j, k) grid of exact values, each cell tagged with the route that produced it."""

    quantity: str
    cells: dict[tuple[int, int], Fraction] = field(default_factory=dict)
    methods: dict[tuple[int, int], str] = field(default_factory=dict)

    def set(self, j: int, k: int, value: Fraction, method: str) -> None:
        self.cells[j, k] = value
        self.methods[j, k] = method

    def __getitem__(self, jk: tuple[int, int]) -> Fraction:
        return self.cells[jk]

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def rows(self) -> list[int]:
        return sorted({j for j, _ in self.cells})

    @property
    def cols(self) -> list[int]:
        return sorted({k for _, k in self.cells})

    def mismatches(self, other: "CoefficientTable") -> list[tuple[int, int, Fraction, Fraction]]:
        """Cells present in both tables whose values differ, row-major."""
        common = sorted(self.cells.keys() & other.cells.keys())
        return [(j, k, self.cells[j, k], other.cells[j, k]) for j, k in common if self.cells[j, k] != other.cells[j, k]]


def build_table(quantity: str, js: Iterable[int], ks: Iterable[int], method: str = "bernoulli_form") -> CoefficientTable:
    try:
        fn = TABLE_ROUTES[quantity][method]
    except KeyError:
        raise ValueError(f"no route {method!r} for quantity {quantity!r}") from None
    ks = list(ks)
    table = CoefficientTable(quantity)
    for j in js:
        for k in ks:
            table.set(j, k, fn(j, k), method)
    return table
