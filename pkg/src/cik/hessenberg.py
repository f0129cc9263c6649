"""Lower Hessenberg determinants and the identities built on them.

Determinants are evaluated with the row recursion

    H_n = sum_{r=1}^{n} (-1)^(n-r) h[n,r] (prod_{l=r}^{n-1} h[l,l+1]) H_(r-1),  H_0 = 1,

which needs only O(n^2) entry reads and never divides, so it stays exact
on rationals without any pivoting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Sequence

from .combinatorics import generalized_binomial

__all__ = [
    "HessenbergMatrix",
    "det_hessenberg",
    "det_dense",
    "wronski_inverse_coeff",
    "bernoulli_hessenberg_matrix",
    "bernoulli_hessenberg_det",
    "rising_factorial_hessenberg_det",
    "ratio_derivative_via_determinant",
    "whittaker_root_term",
    "whittaker_root_partial_sum",
    "DegenerateStage",
]


@dataclass(frozen=True)
class HessenbergMatrix:
    """Square lower Hessenberg matrix of rationals, 0-based indices.

    ``rows[r][c]`` must be zero whenever ``c > r + 1``.
    """

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.rows)
        n = len(rows)
        if n < 1:
            raise ValueError("a Hessenberg matrix needs dimension >= 1")
        for r, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {r} has length {len(row)}, expected {n}")
            if any(row[c] for c in range(r + 2, n)):
                raise ValueError(f"row {r} has a nonzero entry beyond the superdiagonal")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_function(cls, n: int, entry: Callable[[int, int], object]) -> "HessenbergMatrix":
        """Build from ``entry(r, c)``; only called for ``c <= r + 1``."""
        return cls(tuple(tuple(entry(r, c) if c <= r + 1 else 0 for c in range(n)) for r in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, rc: tuple[int, int]) -> Fraction:
        r, c = rc
        return self.rows[r][c]

    def leading(self, m: int) -> "HessenbergMatrix":
        """Leading m x m principal submatrix."""
        return HessenbergMatrix(tuple(row[:m] for row in self.rows[:m]))

    def det(self) -> Fraction:
        return det_hessenberg(self)


def _leading_dets(M: HessenbergMatrix) -> list[Fraction]:
    """[H_0, H_1, ..., H_n] for the leading principal minors of M."""
    h = M.rows
    H = [Fraction(1)]
    for m in range(1, M.n + 1):
        # 0-based: row m-1; r runs over 1-based 1..m, product of superdiagonal h[l-1][l]
        total = Fraction(0)
        prod = Fraction(1)
        for r in range(m, 0, -1):
            if r < m:
                prod *= h[r - 1][r]
                if not prod:
                    break
            entry = h[m - 1][r - 1]
            if entry:
                term = entry * prod * H[r - 1]
                total += -term if (m - r) & 1 else term
        H.append(total)
    return H


def det_hessenberg(M: HessenbergMatrix) -> Fraction:
    """Determinant of a lower Hessenberg matrix by the row recursion."""
    return _leading_dets(M)[-1]


def det_dense(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant of an arbitrary square matrix by fraction Gaussian elimination.

    Only the Whittaker numerators need this; they are Toeplitz with two
    nonzero subdiagonals and so are not Hessenberg.
    """
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f:
                row_r, row_c = a[r], a[col]
                for c in range(col + 1, n):
                    row_r[c] -= f * row_c[c]
    return det


def wronski_inverse_coeff(a: Sequence, j: int) -> Fraction:
    """b_j of 1/f for f(v) = 1 + a_1 v + a_2 v^2 + ...; ``a[i]`` holds a_(i+1)."""
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    if len(a) < j:
        raise ValueError(f"need a_1..a_{j}, got {len(a)} coefficients")

    def entry(r, c):
        d = r - c + 1
        return 1 if d == 0 else a[d - 1]

    M = HessenbergMatrix.from_function(j, entry)
    return (-1) ** j * det_hessenberg(M)


def bernoulli_hessenberg_matrix(j: int) -> HessenbergMatrix:
    """(j+1) x (j+1) matrix with 1/(r-c+2)! on and below the diagonal, 1 above it."""
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    return HessenbergMatrix.from_function(j + 1, lambda r, c: Fraction(1, factorial(r - c + 2)))


def bernoulli_hessenberg_det(j: int) -> Fraction:
    """Equals (-1)^(j+1) B_(j+1) / (j+1)!."""
    return det_hessenberg(bernoulli_hessenberg_matrix(j))


def rising_factorial_hessenberg_det(theta, j: int) -> Fraction:
    """det[C(theta, r-c+1)] over a j x j band; equals (theta)_j / j!."""
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    theta = Fraction(theta)
    M = HessenbergMatrix.from_function(j, lambda r, c: generalized_binomial(theta, r - c + 1))
    return det_hessenberg(M)


def ratio_derivative_via_determinant(g_derivs: Sequence, h_derivs: Sequence, j: int) -> Fraction:
    """j-th derivative of g/h at a point from the bordered Hessenberg determinant.

    ``g_derivs[i]`` and ``h_derivs[i]`` are the i-th derivatives at the point,
    i = 0..j. The matrix has g^(i) in its first column and
    C(i, l-1) h^(i-l+1) in column l >= 1.
    """
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    if len(g_derivs) < j + 1 or len(h_derivs) < j + 1:
        raise ValueError(f"need {j + 1} derivatives of g and h")
    h0 = Fraction(h_derivs[0])
    if h0 == 0:
        raise ValueError("h vanishes at the evaluation point")

    def entry(i, l):
        if l == 0:
            return g_derivs[i]
        return comb(i, l - 1) * Fraction(h_derivs[i - l + 1])

    W = HessenbergMatrix.from_function(j + 1, entry)
    return (-1) ** j * det_hessenberg(W) / h0 ** (j + 1)


class DegenerateStage(ZeroDivisionError):
    def __init__(self, m: int):
        self.stage = m
        super().__init__(f"series stage degenerate at {m}")


def _lam(lam: Sequence, i: int) -> Fraction:
    if i < 0 or i >= len(lam):
        return Fraction(0)
    return Fraction(lam[i])


def _toeplitz_D(lam, m: int) -> Fraction:
    """m x m determinant with first row lam_1..lam_m and lam_0 on the subdiagonal."""
    if m == 0:
        return Fraction(1)
    # transposed to lower Hessenberg form: entry (r, c) = lam_(r-c+1)
    return det_hessenberg(HessenbergMatrix.from_function(m, lambda r, c: _lam(lam, r - c + 1)))


def _toeplitz_N(lam, m: int) -> Fraction:
    """m x m determinant with first row lam_2..lam_(m+1), entry (r, c) = lam_(c-r+2)."""
    if m == 0:
        return Fraction(1)
    return det_dense([[_lam(lam, c - r + 2) for c in range(m)] for r in range(m)])


def whittaker_root_term(lam: Sequence, m: int) -> Fraction:
    """Stage m >= 1 of the smallest-root series: -lam_0^m N_(m-1) / (D_(m-1) D_m).

    The first four stages reproduce the displayed terms exactly; later
    stages continue the same band pattern.
    """
    if m < 1:
        raise ValueError(f"stage must be >= 1, got {m}")
    den = _toeplitz_D(lam, m - 1) * _toeplitz_D(lam, m)
    if den == 0:
        raise DegenerateStage(m)
    return -(_lam(lam, 0) ** m) * _toeplitz_N(lam, m - 1) / den


def whittaker_root_partial_sum(lam: Sequence, terms: int) -> Fraction:
    """Partial sum of the first ``terms`` stages of the smallest-root series of sum lam_i v^i."""
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    if _lam(lam, 0) == 0 or _lam(lam, 1) == 0:
        raise ValueError("lambda_0 and lambda_1 must be nonzero")
    D = [Fraction(1)]
    total = Fraction(0)
    lam0 = _lam(lam, 0)
    for m in range(1, terms + 1):
        D.append(_toeplitz_D(lam, m))
        den = D[m - 1] * D[m]
        if den == 0:
            raise DegenerateStage(m)
        total -= lam0**m * _toeplitz_N(lam, m - 1) / den
    return total
