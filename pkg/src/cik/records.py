"""Machine-readable output: CSV and JSON rows of exact values."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from fractions import Fraction

__all__ = ["QUANTITIES", "OutputRecord", "format_exact", "format_float", "to_csv", "from_csv", "to_json", "from_json"]

QUANTITIES = ("G", "gamma", "C", "f_coeff", "bernoulli", "det")
CSV_COLUMNS = ("quantity", "j", "k", "value_exact", "value_float", "method")


def format_exact(x: Fraction) -> str:
    """'p/q', or just 'p' when q = 1."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_float(x: Fraction) -> str:
    """Nearest double, 17 significant digits."""
    return format(float(Fraction(x)), ".17g")


@dataclass(frozen=True)
class OutputRecord:
    quantity: str
    j: int
    k: int
    value_exact: str
    value_float: str
    method: str

    @classmethod
    def make(cls, quantity: str, j: int, k: int, value: Fraction, method: str) -> "OutputRecord":
        if quantity not in QUANTITIES:
            raise ValueError(f"unknown quantity {quantity!r}")
        return cls(quantity, int(j), int(k), format_exact(value), format_float(value), method)

    @property
    def value(self) -> Fraction:
        return Fraction(self.value_exact)


def to_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow([r.quantity, r.j, r.k, r.value_exact, r.value_float, r.method])
    return buf.getvalue()


def from_csv(text: str) -> list[OutputRecord]:
    rows = csv.DictReader(io.StringIO(text))
    if tuple(rows.fieldnames or ()) != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV header {rows.fieldnames}")
    return [
        OutputRecord(r["quantity"], int(r["j"]), int(r["k"]), r["value_exact"], r["value_float"], r["method"])
        for r in rows
    ]


def to_json(records) -> str:
    return json.dumps([asdict(r) for r in records], indent=2) + "\n"


def from_json(text: str) -> list[OutputRecord]:
    return [OutputRecord(**d) for d in json.loads(text)]
