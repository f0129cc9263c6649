"""Reference tables of G_j^(k)(0), gamma(j, k) and C(j, k), shipped as text fixtures."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .clark_ismail.exact import CoefficientTable

__all__ = ["GOLDEN_FILES", "golden_table"]

GOLDEN_FILES = {"G": "table1_G.txt", "gamma": "table2_gamma.txt", "C": "table3_C.txt"}


@lru_cache(maxsize=None)
def golden_table(quantity: str) -> CoefficientTable:
    """Rows are j = 1, 2, ...; columns are k = 0, 1, ..."""
    text = resources.files("cik.data").joinpath(GOLDEN_FILES[quantity]).read_text()
    table = CoefficientTable(quantity)
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.startswith("#")]
    for j, row in enumerate(rows, start=1):
        for k, cell in enumerate(row):
            table.set(j, k, Fraction(cell), "golden")
    return table
