"""Log-convexity checks and the negative-coefficient scan."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from ..combinatorics import TABLES
from .exact import f_derivative_at_zero, frak_C_coeff_bernoulli, gamma_coeff_bernoulli

__all__ = ["LogConvexityReport", "log_convexity_report", "ScanReport", "scan_nonnegativity"]


@dataclass
class LogConvexityReport:
    j: int
    k_max: int
    # (k, |f^(2k-1)|^2, |f^(2k-3)| |f^(2k+1)|, holds)
    interior: list[tuple[int, Fraction, Fraction, bool]] = field(default_factory=list)
    extended_lhs: Fraction = Fraction(0)
    extended_rhs: Fraction = Fraction(0)

    @property
    def interior_ok(self) -> bool:
        return all(ok for *_, ok in self.interior)

    @property
    def extended_ok(self) -> bool:
        return self.extended_lhs <= self.extended_rhs

    def lines(self) -> list[str]:
        out = [
            f"j={self.j} k={k}: {'pass' if ok else 'FAIL'} ({lhs} <= {rhs})"
            for k, lhs, rhs, ok in self.interior
        ]
        out.append(
            f"j={self.j} extended first step: {'pass' if self.extended_ok else 'fail'} "
            f"({self.extended_lhs} <= {self.extended_rhs})"
        )
        return out


def log_convexity_report(j: int, k_max: int) -> LogConvexityReport:
    """Check |f_j^(2k-1)(0)|^2 <= |f_j^(2k-3)(0)| |f_j^(2k+1)(0)| for 2 <= k <= k_max.

    Also records the extended first step |f_j'(0)|^2 <= |f_j(0)| |f_j'''(0)|,
    which holds exactly when j^2 - 5j - 4 >= 0.
    """
    if j < 1 or k_max < 2:
        raise ValueError(f"need j >= 1 and k_max >= 2, got j={j}, k_max={k_max}")
    a = {m: abs(f_derivative_at_zero(j, m)) for m in range(0, 2 * k_max + 2)}
    report = LogConvexityReport(j, k_max)
    for k in range(2, k_max + 1):
        lhs = a[2 * k - 1] ** 2
        rhs = a[2 * k - 3] * a[2 * k + 1]
        report.interior.append((k, lhs, rhs, lhs <= rhs))
    report.extended_lhs = a[1] ** 2
    report.extended_rhs = a[0] * a[3]
    return report


_SCAN_ROUTES = {"gamma": gamma_coeff_bernoulli, "C": frak_C_coeff_bernoulli}


@dataclass
class ScanReport:
    kind: str
    j_max: int
    k_max: int
    cells: int
    negatives: list[tuple[int, int, Fraction]]

    @property
    def summary(self) -> str:
        return f"scanned {self.cells} cells, {len(self.negatives)} negative"


def _scan_row(args):
    kind, j, k_max = args
    fn = _SCAN_ROUTES[kind]
    return [(j, k, v) for k in range(k_max + 1) if (v := fn(j, k)) < 0]


def _warm(bound: int) -> None:
    TABLES.warm(bound)


def scan_nonnegativity(kind: str, j_max: int, k_max: int, jobs: int = 1) -> ScanReport:
    """List every negative gamma(j, k) or C(j, k) for 1 <= j <= j_max, 0 <= k <= k_max.

    Uses the Bernoulli-form route. Rows may be spread over ``jobs`` worker
    processes; memo tables are warmed to the scan bound first and the result
    is always in row-major order.
    """
    if kind not in _SCAN_ROUTES:
        raise ValueError(f"kind must be 'gamma' or 'C', got {kind!r}")
    if j_max < 1 or k_max < 0:
        raise ValueError(f"need j_max >= 1 and k_max >= 0, got {j_max}, {k_max}")
    bound = j_max + k_max + 2
    _warm(bound)
    tasks = [(kind, j, k_max) for j in range(1, j_max + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs, initializer=_warm, initargs=(bound,)) as pool:
            rows = list(pool.map(_scan_row, tasks))
    else:
        rows = [_scan_row(t) for t in tasks]
    negatives = [cell for row in rows for cell in row]
    return ScanReport(kind, j_max, k_max, j_max * (k_max + 1), negatives)
