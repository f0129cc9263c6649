"""Floating-point evaluation of G_j^(k)(v), f_j(v) and the Bernoulli lower bound.

The closed form writes G_j^(k)(v) as v^(j-k-1) times a polynomial in v and
u = v/(1-e^-v) with integer coefficients. In that shape the terms cancel
catastrophically once v is a few units large (about 1e-2 relative error at
j = k = 16, v = 5). For v > 0 the same integer table is therefore expanded
exactly in x = 1/(e^v - 1), using u = v (1 + x). After the expansion the
pure polynomial part cancels in exact arithmetic and the x-terms decay.
For v < 0 the u form is kept, since u -> 0 there.

Both forms still lose most of their digits for |v| below a few units and
k around 10 or more. Inside |v| <= 6.75 the function is therefore evaluated
from Taylor polynomials centred at 0, +-1.5, ..., +-6. The patch at 0 is the
Maclaurin series with exact coefficients; the others are expanded in 60-digit
decimal arithmetic. The poles of G_j nearest the real axis sit at +-2 pi i,
so every patch stays well inside its disc of convergence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from functools import lru_cache
from math import comb, factorial

import numpy as np

from .. import kernels
from .exact import G_value_bernoulli, closed_form_coefficients

__all__ = [
    "EvalPoint",
    "PATCH_STEP",
    "PATCH_RADIUS",
    "TAYLOR_TERMS",
    "ALPHA",
    "BETA",
    "G_eval_numeric",
    "G_eval",
    "G_eval_grid",
    "f_eval_numeric",
    "f_eval_grid",
    "f_lower_bound_series",
]

PATCH_STEP = 1.5
PATCH_RADIUS = 4.5 * PATCH_STEP  # beyond this the x/u forms take over
TAYLOR_TERMS = 48
_DIGITS = 60

#: best constants in the two-sided bound for |B_2j|
ALPHA = 0.0
BETA = 2.0 + math.log(1.0 - 6.0 / math.pi**2) / math.log(2.0)


@dataclass(frozen=True)
class EvalPoint:
    v: float
    j: int
    k: int

    def __post_init__(self):
        if not math.isfinite(self.v):
            raise ValueError(f"v must be finite, got {self.v}")
        if self.j < 1 or self.k < 0:
            raise ValueError(f"need j >= 1 and k >= 0, got j={self.j}, k={self.k}")


@lru_cache(maxsize=None)
def _u_table(j: int, k: int) -> np.ndarray:
    # rows: power of v (q); cols: power of u (m+1)
    a = closed_form_coefficients(j, k)
    d = np.zeros((k + 1, k + 2))
    for q, row in enumerate(a):
        for m, c in enumerate(row):
            d[q, m + 1] = float(c)
    d.setflags(write=False)
    return d


@lru_cache(maxsize=None)
def _x_table(j: int, k: int) -> np.ndarray:
    # u^(m+1) v^q = v^(q+m+1) (1+x)^(m+1); rows: l = q+m, cols: power of x
    a = closed_form_coefficients(j, k)
    exact = [[0] * (k + 2) for _ in range(k + 1)]
    for q, row in enumerate(a):
        for m, c in enumerate(row):
            if c:
                for b in range(m + 2):
                    exact[q + m][b] += c * comb(m + 1, b)
    d = np.array([[float(c) for c in row] for row in exact])
    d.setflags(write=False)
    return d


def _taylor_at(j: int, k: int, c: Decimal) -> list:
    """[G_j^(k+n)(c) / n! for n < TAYLOR_TERMS], c != 0, in decimal arithmetic."""
    order = k + TAYLOR_TERMS
    with localcontext() as ctx:
        ctx.prec = _DIGITS
        y = (-c).exp()
        # 1 / (1 - y e^-t) by the reciprocal recurrence
        d = [1 - y] + [-y * (-1) ** i / factorial(i) for i in range(1, order)]
        r = [1 / d[0]]
        for n in range(1, order):
            r.append(-sum(d[i] * r[n - i] for i in range(1, n + 1)) / d[0])
        # times (c + t)^j
        p = [comb(j, i) * c ** (j - i) for i in range(j + 1)]
        a = [sum(p[i] * r[m - i] for i in range(min(m, j) + 1)) for m in range(order)]
        return [a[k + n] * (factorial(k + n) // factorial(n)) for n in range(TAYLOR_TERMS)]


@lru_cache(maxsize=None)
def _patch(j: int, k: int, index: int) -> np.ndarray:
    # Taylor coefficients around index * PATCH_STEP, lowest power first, as a one-column table
    if index == 0:
        c = [G_value_bernoulli(j, k + n) / factorial(n) for n in range(TAYLOR_TERMS)]
    else:
        c = _taylor_at(j, k, Decimal(index) * Decimal(str(PATCH_STEP)))
    d = np.array([[float(x)] for x in c])
    d.setflags(write=False)
    return d


def G_eval_grid(j: int, k: int, vs) -> np.ndarray:
    """G_j^(k)(v) at every point of ``vs`` (no point may be 0)."""
    if j < 1 or k < 0:
        raise ValueError(f"need j >= 1 and k >= 0, got j={j}, k={k}")
    vs = np.asarray(vs, dtype=np.float64)
    flat = vs.reshape(-1)
    if np.any(flat == 0.0):
        raise ValueError("v = 0 is not allowed; use the exact routes for values at 0")
    if not np.all(np.isfinite(flat)):
        raise ValueError("v must be finite")
    out = np.empty_like(flat)

    near = np.abs(flat) <= PATCH_RADIUS
    pos = ~near & (flat > 0)
    neg = ~near & (flat < 0)
    if near.any():
        idx = np.rint(flat / PATCH_STEP).astype(np.int64)
        for i in np.unique(idx[near]):
            sel = near & (idx == i)
            t = flat[sel] - i * PATCH_STEP
            out[sel] = kernels.bivariate_horner(_patch(j, k, int(i)), 0, t, np.zeros_like(t))
    if pos.any():
        v = flat[pos]
        x = 1.0 / np.expm1(v)
        out[pos] = kernels.bivariate_horner(_x_table(j, k), j - k, v, x)
    if neg.any():
        v = flat[neg]
        u = v / -np.expm1(-v)
        out[neg] = kernels.bivariate_horner(_u_table(j, k), j - k - 1, v, u)
    return out.reshape(vs.shape)


def G_eval(j: int, k: int, v: float) -> float:
    return float(G_eval_grid(j, k, [v])[0])


def G_eval_numeric(p: EvalPoint) -> float:
    """G_j^(k)(v) for a single evaluation point."""
    return G_eval(p.j, p.k, p.v)


def f_eval_numeric(j: int, v: float) -> float:
    """f_j(v) = G_j^(j)(v)."""
    return G_eval(j, j, v)


def f_eval_grid(j: int, vs) -> np.ndarray:
    return G_eval_grid(j, j, vs)


def f_lower_bound_series(j: int, v: float, terms: int) -> float:
    """Partial sum of the Bernoulli-bound lower series for f_j(v)/j!.

    Each of the two inner sums is taken over r = 1..terms.
    """
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    if not v > 0:
        raise ValueError(f"v must be positive, got {v}")
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    t = v / (2.0 * math.pi)
    up = sum(comb(j + 4 * r - 3, j) / (1.0 - 2.0 ** (ALPHA - 4 * r + 2)) * t ** (4 * r - 3) for r in range(1, terms + 1))
    down = sum(comb(j + 4 * r - 1, j) / (1.0 - 2.0 ** (BETA - 4 * r)) * t ** (4 * r - 1) for r in range(1, terms + 1))
    return 0.5 + (up - down) / math.pi

